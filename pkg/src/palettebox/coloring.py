"""Edge colorings, properness checks, and palette summaries.

A palette of a vertex is the set of colors on its incident edges.  All
colors are positive integers; color tuples are aligned with the host
graph's canonical edge order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from palettebox.graphs import Edge, Graph, Matching, ProductIndex, canonical_edge, cartesian_product


@dataclass(frozen=True)
class EdgeColoring:
    """An assignment of a positive color to every edge of a host graph."""

    graph: Graph
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != len(self.graph.edges):
            raise ValueError("need exactly one color per edge")
        for c in self.colors:
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"colors must be positive integers, got {c!r}")

    @classmethod
    def from_map(cls, graph: Graph, mapping: Mapping[Edge, int]) -> "EdgeColoring":
        colors = []
        for e in graph.edges:
            if e not in mapping:
                raise ValueError(f"edge {e} has no color")
            colors.append(mapping[e])
        if len(mapping) != len(graph.edges):
            extra = set(mapping) - set(graph.edges)
            raise ValueError(f"colors given for non-edges: {sorted(extra)}")
        return cls(graph, tuple(colors))

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self.graph.edge_index[canonical_edge(u, v)]]

    def as_map(self) -> dict[Edge, int]:
        return dict(zip(self.graph.edges, self.colors))

    @property
    def max_color(self) -> int:
        return max(self.colors, default=0)

    def used_colors(self) -> frozenset[int]:
        return frozenset(self.colors)

    def palette(self, v: int) -> frozenset[int]:
        return frozenset(self.color_of(v, w) for w in self.graph.adjacency[v])


Violation = tuple[int, Edge, Edge]


def check_proper(coloring: EdgeColoring) -> tuple[bool, Optional[Violation]]:
    """Check that incident edges never share a color.

    Returns (True, None) or (False, witness) where the witness is the first
    (vertex, edge, edge) clash in vertex order, edges in canonical order.
    """
    g = coloring.graph
    for v in range(g.n):
        seen: dict[int, Edge] = {}
        for e in g.incident_edges(v):
            c = coloring.colors[g.edge_index[e]]
            if c in seen:
                return False, (v, seen[c], e)
            seen[c] = e
    return True, None


@dataclass(frozen=True)
class PaletteSummary:
    """Distinct vertex palettes of a proper coloring.

    ``distinct`` lists each palette once as a sorted color tuple, in
    lexicographic order; ``per_vertex`` maps every vertex to its palette's
    position in that list.
    """

    distinct: tuple[tuple[int, ...], ...]
    per_vertex: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.distinct)

    def palette_of(self, v: int) -> frozenset[int]:
        return frozenset(self.distinct[self.per_vertex[v]])

    def palette_sets(self) -> set[frozenset[int]]:
        return {frozenset(p) for p in self.distinct}


def palette_summary(coloring: EdgeColoring) -> PaletteSummary:
    """Palette summary of a proper coloring; improper input is rejected."""
    ok, witness = check_proper(coloring)
    if not ok:
        v, e1, e2 = witness
        raise ValueError(f"improper coloring: edges {e1} and {e2} share a color at vertex {v}")
    g = coloring.graph
    raw = [tuple(sorted(coloring.palette(v))) for v in range(g.n)]
    distinct = tuple(sorted(set(raw)))
    index = {p: i for i, p in enumerate(distinct)}
    return PaletteSummary(distinct, tuple(index[p] for p in raw))


def extend_by_matching(coloring: EdgeColoring, matching: Matching,
                       color: Optional[int] = None) -> EdgeColoring:
    """Color a perfect matching on top of a coloring of the rest of the host.

    ``coloring`` must cover exactly the host graph minus the matching.  The
    matching color defaults to the smallest color unused by ``coloring``
    and must be fresh; every vertex palette then grows by exactly that
    color, so the number of distinct palettes is preserved.
    """
    if not matching.is_perfect:
        raise ValueError("matching must be perfect")
    host = matching.host
    rest = coloring.graph
    if rest.n != host.n or set(rest.edges) != host.edge_set - set(matching.edges):
        raise ValueError("coloring must cover the host graph minus the matching")
    used = coloring.used_colors()
    if color is None:
        color = next(c for c in range(1, len(used) + 2) if c not in used)
    elif color in used:
        raise ValueError(f"color {color} is already in use")
    mapping = coloring.as_map()
    for e in matching.edges:
        mapping[e] = color
    return EdgeColoring.from_map(host, mapping)


def disjoint_product_coloring(g_col: EdgeColoring, h_col: EdgeColoring) -> EdgeColoring:
    """Color G box H by keeping g on G-fibers and shifting h past g's colors.

    The palette of (a, x) is P_g(a) united with the shifted P_h(x), so the
    product has at most (palettes of g) * (palettes of h) distinct palettes.
    """
    g, h = g_col.graph, h_col.graph
    product = cartesian_product(g, h)
    idx = ProductIndex(g.n, h.n)
    offset = g_col.max_color
    mapping: dict[Edge, int] = {}
    for (u, v), c in zip(g.edges, g_col.colors):
        for b in range(h.n):
            mapping[canonical_edge(idx.flat(u, b), idx.flat(v, b))] = c
    for (x, y), c in zip(h.edges, h_col.colors):
        for a in range(g.n):
            mapping[canonical_edge(idx.flat(a, x), idx.flat(a, y))] = c + offset
    return EdgeColoring.from_map(product, mapping)
