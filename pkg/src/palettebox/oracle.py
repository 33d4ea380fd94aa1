"""Exact palette index oracle with lower-bound certificates.

The palette index of a graph is the minimum number of distinct vertex
palettes over all proper edge colorings.  The oracle deepens a target
palette count p from a certified lower bound upward; for each p it runs
an exhaustive search over colorings with at most p distinct palettes.
A coloring with p distinct palettes mentions at most p*Delta colors, so
restricting the search to min(p*Delta, |E|) colors loses nothing.

Lower bound rules:

* ``degree-set``: vertices of different degrees have different palettes.
* ``regular-class2``: a regular class-2 graph has palette index >= 3
  (one palette would give a Delta-coloring, and exactly two distinct
  palettes are impossible on a regular graph).
* ``regular-not-2``: p = 1 was exhausted and the graph is regular, so
  p = 2 is skipped for the same reason.
* ``exhaustive``: every smaller p was exhausted by search.

Budgets interrupt cleanly: the certificate then reports the proven
interval and is never marked exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from palettebox import search
from palettebox.coloring import EdgeColoring, palette_summary
from palettebox.graphs import Graph
from palettebox.search import ensure_tracker
from palettebox.solver import ChromaticIndexResult, chromatic_index, coloring_from_search, solver_edge_order


@dataclass(frozen=True)
class Certificate:
    """A proven interval for the palette index of one graph.

    ``lower`` always holds; ``upper`` is the palette count of ``witness``
    when a witness is known.  ``exact`` is claimed only when the interval
    collapses.
    """

    lower: int
    upper: Optional[int]
    rule: str
    witness: Optional[EdgeColoring]
    nodes: int = 0

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def interval(self) -> tuple[int, Optional[int]]:
        return (self.lower, self.upper)


def default_max_palettes(graph: Graph) -> int:
    """Search cap: Delta+1 for regular graphs, #degrees + Delta otherwise."""
    if graph.n == 0 or not graph.edges:
        return 1
    distinct = len(set(graph.degrees))
    if graph.is_regular:
        return graph.max_degree + 1
    return distinct + graph.max_degree


def _lower_bound_impl(graph: Graph, tracker) -> tuple[int, str, Optional[ChromaticIndexResult]]:
    if graph.n == 0:
        return 0, "degree-set", None
    distinct = len(set(graph.degrees))
    if not graph.is_regular:
        return distinct, "degree-set", None
    if graph.max_degree == 0:
        return 1, "degree-set", None
    result = chromatic_index(graph, tracker)
    if result.status == "exact" and result.is_class_one is False:
        return 3, "regular-class2", result
    return 1, "degree-set", result


def lower_bound(graph: Graph, budget=None) -> tuple[int, str]:
    """Best structural lower bound for the palette index, with its rule.

    Under a too-small budget the regular/class-2 route degrades to the
    degree bound rather than guessing.
    """
    value, rule, _ = _lower_bound_impl(graph, ensure_tracker(budget))
    return value, rule


def palette_index_exact(graph: Graph, max_palettes: Optional[int] = None,
                        budget=None) -> Certificate:
    """Exact palette index by iterative deepening, or a proven interval.

    Deepening starts at the certified lower bound.  Exhausting target p
    raises the proven lower bound to p+1 (skipping 2 on regular graphs).
    The first target that admits a coloring is the palette index, since
    any coloring with c distinct palettes can be relabeled into the
    colors the target-c search explores.
    """
    tracker = ensure_tracker(budget)
    if graph.n == 0:
        return Certificate(0, 0, "degree-set", EdgeColoring(graph, ()), tracker.nodes)
    if not graph.edges:
        witness = EdgeColoring(graph, ())
        return Certificate(1, 1, "degree-set", witness, tracker.nodes)
    if max_palettes is None:
        max_palettes = default_max_palettes(graph)
    if max_palettes < 1:
        raise ValueError("max_palettes must be at least 1")

    delta = graph.max_degree
    m = len(graph.edges)
    order = solver_edge_order(graph)
    eu = [graph.edges[i][0] for i in order]
    ev = [graph.edges[i][1] for i in order]
    deg = list(graph.degrees)

    proven, rule, chrom = _lower_bound_impl(graph, tracker)
    proven = max(proven, 1)
    fallback = chrom.witness if chrom is not None and chrom.witness is not None else None

    def finish_inexact(current_rule: str) -> Certificate:
        nonlocal fallback
        if fallback is None:
            extra = chromatic_index(graph, tracker)
            fallback = extra.witness
        if fallback is None:
            return Certificate(proven, None, current_rule, None, tracker.nodes)
        upper = palette_summary(fallback).count
        return Certificate(proven, upper, current_rule, fallback, tracker.nodes)

    p = proven
    while p <= max_palettes:
        if graph.is_regular and p == 2:
            proven, rule = 3, "regular-not-2"
            p = 3
            continue
        k = min(p * delta, m)
        if k > search.MAX_COLORS:
            # Exhaustion above the kernel's color width would be unsound.
            return finish_inexact(rule)
        status, colors = search.search_palette_count(eu, ev, graph.n, deg, k, p, tracker)
        if status == search.FOUND:
            witness = coloring_from_search(graph, order, colors)
            return Certificate(p, p, rule, witness, tracker.nodes)
        if status == search.BUDGET:
            return finish_inexact(rule)
        proven, rule = p + 1, "exhaustive"
        p += 1
    return finish_inexact(rule)


def certify(graph: Graph, candidates: Sequence[EdgeColoring], budget=None) -> Certificate:
    """Combine the structural lower bound with caller-supplied witnesses.

    Each candidate must be a proper coloring of exactly this graph; the
    best palette count becomes the upper bound.
    """
    tracker = ensure_tracker(budget)
    value, rule, _ = _lower_bound_impl(graph, tracker)
    best_count: Optional[int] = None
    best: Optional[EdgeColoring] = None
    for cand in candidates:
        if cand.graph.n != graph.n or cand.graph.edges != graph.edges:
            raise ValueError("candidate colors a different graph")
        count = palette_summary(cand).count
        if best_count is None or count < best_count:
            best_count, best = count, cand
    return Certificate(value, best_count, rule, best, tracker.nodes)


def coloring_within_family(graph: Graph, family: Iterable[frozenset[int]],
                           budget=None) -> tuple[int, Optional[EdgeColoring]]:
    """Proper coloring whose palettes all lie in the given family, if any.

    Returns (status, coloring) with search.FOUND / EXHAUSTED / BUDGET.
    """
    order = solver_edge_order(graph)
    eu = [graph.edges[i][0] for i in order]
    ev = [graph.edges[i][1] for i in order]
    status, colors = search.search_palette_family(eu, ev, graph.n, list(graph.degrees),
                                                  family, ensure_tracker(budget))
    if status == search.FOUND:
        return status, coloring_from_search(graph, order, colors)
    return status, None


def naive_minimum_palettes(graph: Graph) -> int:
    """Minimum distinct palettes by enumerating partitions of E into matchings.

    Deliberately independent of the backtracking kernels: it walks every
    set partition of the edge list whose parts are matchings (parts
    ordered by their first edge) and takes the best palette count seen.
    Exponential; use on graphs with at most a dozen edges.
    """
    m = len(graph.edges)
    if graph.n == 0:
        return 0
    if m == 0:
        return 1
    edges = graph.edges
    incident: list[list[int]] = [[] for _ in range(graph.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)

    class_of = [-1] * m
    part_masks: list[int] = []
    best = graph.n + 1

    def leaf_count() -> int:
        pals = set()
        for v in range(graph.n):
            pals.add(frozenset(class_of[i] for i in incident[v]))
        return len(pals)

    def rec(i: int):
        nonlocal best
        if i == m:
            count = leaf_count()
            if count < best:
                best = count
            return
        u, v = edges[i]
        bit = (1 << u) | (1 << v)
        for j in range(len(part_masks)):
            if part_masks[j] & bit == 0:
                part_masks[j] |= bit
                class_of[i] = j
                rec(i + 1)
                part_masks[j] &= ~bit
        part_masks.append(bit)
        class_of[i] = len(part_masks) - 1
        rec(i + 1)
        part_masks.pop()
        class_of[i] = -1

    rec(0)
    return best
