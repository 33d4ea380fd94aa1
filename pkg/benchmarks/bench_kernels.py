"""Compare the compiled and pure-Python search backends on fixed workloads.

Run as: python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs once per backend via the PALETTEBOX_BACKEND switch and
must return identical results; wall times and node throughputs are
printed side by side.  The compiled numbers include no JIT warmup: a
throwaway call compiles the kernels first.
"""

from __future__ import annotations

import argparse
import os
import time

from palettebox.constructions import PATH_MODE_FAMILY
from palettebox.graphs import cartesian_product, complete_graph, cycle_graph, path_graph, petersen_graph
from palettebox.oracle import coloring_within_family, palette_index_exact
from palettebox.search import BACKEND_ENV, HAS_NUMBA, SearchBudget
from palettebox.solver import chromatic_index

BUDGET = SearchBudget(max_nodes=300_000_000)


def workload_chromatic():
    """Petersen class-2 proof: exhaust 3 colors, then find 4."""
    result = chromatic_index(petersen_graph(), BUDGET)
    return result.value, result.nodes


def workload_palette_oracle():
    """K_7: prove 2 palettes impossible, find 3."""
    cert = palette_index_exact(complete_graph(7), budget=BUDGET)
    return cert.lower, cert.nodes


def workload_family():
    """Family-constrained coloring of P_5 box C_5."""
    block = cartesian_product(path_graph(5), cycle_graph(5))
    status, col = coloring_within_family(block, PATH_MODE_FAMILY, BUDGET)
    return status, None if col is None else tuple(col.colors)


WORKLOADS = [
    ("chromatic petersen", workload_chromatic),
    ("palette oracle K7", workload_palette_oracle),
    ("family P5xC5", workload_family),
]


def run(backend: str, repeat: int):
    os.environ[BACKEND_ENV] = backend
    rows = []
    for name, fn in WORKLOADS:
        fn()  # warmup: numba compilation, caches
        best = None
        value = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            value = fn()
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        rows.append((name, value, best))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["python"] + (["numba"] if HAS_NUMBA else [])
    results = {b: run(b, args.repeat) for b in backends}
    if not HAS_NUMBA:
        print("numba not installed; python backend only\n")

    width = max(len(n) for n, _ in WORKLOADS)
    header = f"{'workload':<{width}}  " + "  ".join(f"{b:>12}" for b in backends)
    print(header)
    print("-" * len(header))
    for i, (name, _) in enumerate(WORKLOADS):
        cells = []
        values = set()
        for b in backends:
            wname, value, best = results[b][i]
            values.add(repr(value))
            cells.append(f"{best * 1000:>10.1f}ms")
        agree = "" if len(values) == 1 else "  RESULTS DIFFER!"
        print(f"{name:<{width}}  " + "  ".join(cells) + agree)
    if len(backends) == 2:
        print()
        for i, (name, _) in enumerate(WORKLOADS):
            py = results["python"][i][2]
            nb = results["numba"][i][2]
            print(f"{name:<{width}}  numba speedup: {py / nb:>6.1f}x")


if __name__ == "__main__":
    main()
