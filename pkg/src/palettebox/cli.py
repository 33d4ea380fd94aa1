"""Command line front end.

Subcommands: gen, product, construct, torus, theta, oracle, verify,
export.  Exit codes: 0 success, 1 a check failed, 2 a search budget ran
out before a verdict.  The default budget comes from the
PALETTEBOX_BUDGET_SECONDS and PALETTEBOX_BUDGET_NODES environment
variables when flags are absent.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from palettebox import formats
from palettebox.coloring import EdgeColoring, check_proper, palette_summary
from palettebox.constructions import (
    class1_product_coloring,
    cubic_matching_reduction,
    cycle_times_regular_coloring,
    make_nrg_spec,
    nrg_product_coloring,
    path_times_class1_regular_coloring,
    path_times_regular_coloring,
)
from palettebox.graphs import canonical_edge, cartesian_product
from palettebox.oracle import certify, lower_bound, palette_index_exact
from palettebox.search import SearchBudget
from palettebox.solver import chromatic_index
from palettebox.theta import is_partial_cube, theta_classes, theta_removal_coloring
from palettebox.torus import TorusDecomposition, torus_three_palette_coloring, verify_partition
from palettebox.verify import SUITES, run_verify_suite

PASS, FAIL, INDETERMINATE = 0, 1, 2

BUDGET_SECONDS_ENV = "PALETTEBOX_BUDGET_SECONDS"
BUDGET_NODES_ENV = "PALETTEBOX_BUDGET_NODES"


def _budget_from(args) -> Optional[SearchBudget]:
    nodes = args.budget_nodes
    seconds = args.budget_seconds
    if nodes is None and BUDGET_NODES_ENV in os.environ:
        nodes = int(os.environ[BUDGET_NODES_ENV])
    if seconds is None and BUDGET_SECONDS_ENV in os.environ:
        seconds = float(os.environ[BUDGET_SECONDS_ENV])
    deterministic = getattr(args, "deterministic", False)
    if nodes is None and seconds is None and not deterministic:
        return None
    return SearchBudget(max_nodes=nodes, max_seconds=seconds, deterministic=deterministic)


def _add_budget_flags(p: argparse.ArgumentParser):
    p.add_argument("--budget-nodes", type=int, default=None,
                   help="stop searches after this many nodes")
    p.add_argument("--budget-seconds", type=float, default=None,
                   help="stop searches after this much wall time")
    p.add_argument("--deterministic", action="store_true",
                   help="ignore wall-clock limits and null timings for reproducible output")


def _emit(args, obj: dict, text: str):
    out = formats.dump_json(obj) if args.json else text
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(out if out.endswith("\n") else out + "\n")
    else:
        print(out)


def _coloring_report(col: EdgeColoring) -> tuple[dict, str]:
    summ = palette_summary(col)
    obj = formats.coloring_to_json(col)
    obj["palettes"] = formats.palettes_to_json(summ)
    pal = ", ".join("{" + ",".join(map(str, sorted(p))) + "}" for p in summ.distinct)
    text = (f"{col.graph.tag or 'graph'}: {col.graph.n} vertices, "
            f"{len(col.graph.edges)} edges, {summ.count} palettes: {pal}")
    return obj, text


def _cmd_gen(args) -> int:
    g = formats.parse_graph_spec(args.graph)
    _emit(args, formats.graph_to_json(g),
          f"{g.tag or 'graph'}: {g.n} vertices, {len(g.edges)} edges")
    return PASS


def _cmd_product(args) -> int:
    g = formats.parse_graph_spec(args.left)
    h = formats.parse_graph_spec(args.right)
    prod = cartesian_product(g, h)
    _emit(args, formats.graph_to_json(prod),
          f"{prod.tag}: {prod.n} vertices, {len(prod.edges)} edges")
    return PASS


def _cmd_construct(args) -> int:
    budget = _budget_from(args)
    theorem = args.theorem
    if theorem == "mah":
        g = formats.parse_graph_spec(args.graph)
        h = formats.parse_graph_spec(args.host)
        g_res = chromatic_index(g, budget)
        h_res = chromatic_index(h, budget)
        if g_res.status != "exact" or h_res.status != "exact":
            print("budget ran out while classifying a factor", file=sys.stderr)
            return INDETERMINATE
        col = class1_product_coloring(g_res.witness, h_res.witness, args.c)
    elif theorem == "nrg":
        g = formats.parse_graph_spec(args.graph)
        h = formats.parse_graph_spec(args.host)
        removed = _parse_edges(args.remove)
        spec = make_nrg_spec(g, removed, budget=budget)
        col = nrg_product_coloring(spec, h, budget=budget)
    elif theorem == "cng":
        g = formats.parse_graph_spec(args.graph)
        col = cycle_times_regular_coloring(args.s, g, budget=budget)
    elif theorem == "png":
        g = formats.parse_graph_spec(args.graph)
        result = chromatic_index(g, budget)
        if result.status != "exact":
            print("budget ran out while classifying the factor", file=sys.stderr)
            return INDETERMINATE
        if result.value == g.max_degree:
            col = path_times_class1_regular_coloring(args.s, g, budget=budget)
        else:
            col = path_times_regular_coloring(args.s, g, budget=budget)
    else:
        g = formats.parse_graph_spec(args.graph)
        col = cubic_matching_reduction(args.s, g, mode=args.mode, budget=budget)
    obj, text = _coloring_report(col)
    _emit(args, obj, text)
    return PASS


def _parse_edges(text: Optional[str]) -> list[tuple[int, int]]:
    if not text:
        return []
    out = []
    for part in text.split(","):
        u, _, v = part.partition("-")
        out.append(canonical_edge(int(u), int(v)))
    return out


def _cmd_torus(args) -> int:
    dec = TorusDecomposition(args.s, args.t)
    ok, problems = verify_partition(dec)
    if args.dot:
        sys.stdout.write(formats.export_class_dot(dec, f"C{args.s}xC{args.t}"))
        return PASS if ok else FAIL
    obj = formats.torus_to_json(dec)
    obj["partitionOk"] = ok
    if not ok:
        obj["problems"] = problems
    col = torus_three_palette_coloring(args.s, args.t)
    summ = palette_summary(col)
    obj["coloring"] = formats.coloring_to_json(col)
    obj["palettes"] = formats.palettes_to_json(summ)
    text = (f"C_{args.s} x C_{args.t}: partition {'ok' if ok else 'BROKEN'}, "
            f"{summ.count} palettes")
    _emit(args, obj, text)
    return PASS if ok else FAIL


def _cmd_theta(args) -> int:
    g = formats.parse_graph_spec(args.graph)
    tc = theta_classes(g)
    cube = is_partial_cube(tc)
    if args.remove is not None:
        if args.klass is None or args.host is None:
            raise ValueError("--remove needs --class and --host alongside it")
        removed = _parse_edges(args.remove)
        host = formats.parse_graph_spec(args.host)
        col = theta_removal_coloring(g, args.klass, removed, host,
                                     budget=_budget_from(args))
        obj, text = _coloring_report(col)
        _emit(args, obj, text)
        return PASS
    obj = {
        "classes": [[list(e) for e in cls] for cls in tc.classes],
        "count": tc.count,
        "isPartialCube": cube,
        "everyVertexInEveryClass": tc.every_vertex_in_every_class,
    }
    text = (f"{g.tag or 'graph'}: {tc.count} theta classes, "
            f"partial cube: {'yes' if cube else 'no'}")
    _emit(args, obj, text)
    return PASS


def _cmd_oracle(args) -> int:
    g = formats.parse_graph_spec(args.graph)
    budget = _budget_from(args)
    if args.lower_bound_only:
        value, rule = lower_bound(g, budget)
        _emit(args, {"lower": value, "rule": rule}, f"palette index >= {value} ({rule})")
        return PASS
    cert = palette_index_exact(g, max_palettes=args.max_palettes, budget=budget)
    obj = formats.certificate_to_json(cert)
    if cert.exact:
        text = f"palette index of {g.tag or 'graph'} = {cert.lower} (rule: {cert.rule})"
    else:
        hi = cert.upper if cert.upper is not None else "?"
        text = f"palette index of {g.tag or 'graph'} in [{cert.lower}, {hi}] (budget ran out)"
    _emit(args, obj, text)
    return PASS if cert.exact else INDETERMINATE


def _cmd_verify(args) -> int:
    budget = _budget_from(args)
    report = run_verify_suite(args.suite, max_s=args.max_s, max_n=args.max,
                              max_edges=args.max_edges, budget=budget,
                              deterministic=args.deterministic)
    lines = [f"{c['name']}: {c['outcome']}" + (f" ({c['detail']})" if c["detail"] else "")
             for c in report["cases"]]
    lines.append(f"suite {report['suite']}: {report['status']} "
                 f"({report['passed']} passed, {report['failed']} failed, "
                 f"{report['indeterminate']} indeterminate)")
    _emit(args, report, "\n".join(lines))
    if report["status"] == "pass":
        return PASS
    return FAIL if report["status"] == "fail" else INDETERMINATE


def _cmd_export(args) -> int:
    import json

    with open(args.coloring) as fh:
        col = formats.coloring_from_json(json.load(fh))
    dot = formats.export_dot(col, name=args.name)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palettebox",
        description="Palette-minimizing edge colorings of Cartesian product graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a generated graph as JSON")
    p.add_argument("graph", help="graph spec: P<n>, C<n>, K<n>, Q<r>, petersen, or JSON path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("product", help="Cartesian product of two graph specs")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("construct", help="run a named product coloring construction")
    p.add_argument("--theorem", required=True, choices=("mah", "nrg", "cng", "png", "cubic"))
    p.add_argument("--graph", required=True, help="the main factor G")
    p.add_argument("--host", help="the other factor H (mah, nrg)")
    p.add_argument("--s", type=int, help="layer count for cng/png/cubic")
    p.add_argument("--c", type=int, help="recolored class (mah class-2 branch)")
    p.add_argument("--remove", help="edges u-v,x-y to delete (nrg)")
    p.add_argument("--mode", choices=("cycle", "path"), default="cycle")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    _add_budget_flags(p)
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("torus", help="Z-walk decomposition and coloring of C_s x C_t")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--dot", action="store_true", help="emit class-styled DOT instead of JSON")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_torus)

    p = sub.add_parser("theta", help="theta classes; optionally color (G-X) x H")
    p.add_argument("graph")
    p.add_argument("--remove", help="edges u-v,x-y inside one class")
    p.add_argument("--class", dest="klass", type=int, default=0,
                   help="class index the removed edges belong to")
    p.add_argument("--host", help="the factor H for the removal coloring")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    _add_budget_flags(p)
    p.set_defaults(fn=_cmd_theta)

    p = sub.add_parser("oracle", help="exact palette index with certificate")
    p.add_argument("graph")
    p.add_argument("--max-palettes", type=int, default=None)
    p.add_argument("--lower-bound-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    _add_budget_flags(p)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-s", type=int, default=13, help="torus sweep bound")
    p.add_argument("--max", type=int, default=5, help="cycle-path sweep bound")
    p.add_argument("--max-edges", type=int, default=12, help="oracle-cross corpus bound")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    _add_budget_flags(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("export", help="DOT render of a coloring JSON file")
    p.add_argument("coloring", help="path to coloring JSON")
    p.add_argument("--name", default="G")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_export)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
