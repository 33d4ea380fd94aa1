"""Djokovic-Winkler edge classes and the hypercube-like removal coloring.

Two edges are related when their endpoint distances disagree, i.e.
d(x,u) + d(y,v) != d(x,v) + d(y,u) for e = xy and f = uv.  On partial
cubes the transitive closure of this relation cuts the edge set into
parallelism classes, each a perfect matching when every vertex meets
every class; removing part of one class then feeds the nearly-regular
two-palette product construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from palettebox.coloring import EdgeColoring
from palettebox.constructions import NrgSpec, nrg_product_coloring
from palettebox.graphs import (
    Edge,
    Graph,
    Matching,
    all_pairs_distances,
    canonical_edge,
    connected_components,
    is_bipartite,
    is_connected,
)


def _theta_related(dist, e: Edge, f: Edge) -> bool:
    x, y = e
    u, v = f
    return dist[x][u] + dist[y][v] != dist[x][v] + dist[y][u]


@dataclass(frozen=True)
class ThetaClasses:
    """The transitive closure classes of the distance relation on edges."""

    graph: Graph
    classes: tuple[tuple[Edge, ...], ...]
    raw_is_transitive: bool

    @property
    def count(self) -> int:
        return len(self.classes)

    def class_of(self, u: int, v: int) -> int:
        e = canonical_edge(u, v)
        for i, cls in enumerate(self.classes):
            if e in cls:
                return i
        raise KeyError(f"edge {e} not in graph")

    @cached_property
    def per_vertex_counts(self) -> tuple[tuple[int, ...], ...]:
        """How many edges of each class meet each vertex."""
        counts = [[0] * self.count for _ in range(self.graph.n)]
        for i, cls in enumerate(self.classes):
            for u, v in cls:
                counts[u][i] += 1
                counts[v][i] += 1
        return tuple(tuple(row) for row in counts)

    @property
    def every_vertex_in_every_class(self) -> bool:
        """True when each class is a perfect matching of the graph."""
        return all(all(c == 1 for c in row) for row in self.per_vertex_counts)

    def matchings(self) -> tuple[Matching, ...]:
        if not self.every_vertex_in_every_class:
            raise ValueError("classes are not all perfect matchings")
        return tuple(Matching.from_edges(self.graph, cls) for cls in self.classes)


def theta_classes(graph: Graph) -> ThetaClasses:
    """Group the edges by the transitive closure of the theta relation.

    Requires a connected graph (distances must all be finite).  Classes
    are ordered by their least edge.
    """
    if graph.n == 0:
        raise ValueError("empty graph has no theta classes")
    if not is_connected(graph):
        raise ValueError("theta classes need a connected graph")
    m = len(graph.edges)
    dist = all_pairs_distances(graph)

    parent = list(range(m))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    related: list[list[int]] = [[] for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if _theta_related(dist, graph.edges[i], graph.edges[j]):
                related[i].append(j)
                related[j].append(i)
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    groups: dict[int, list[Edge]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(graph.edges[i])
    classes = tuple(tuple(g) for _, g in sorted(groups.items()))

    # raw relation is transitive iff every class is a clique of it
    index = {e: i for i, e in enumerate(graph.edges)}
    transitive = True
    for cls in classes:
        ids = [index[e] for e in cls]
        for a in range(len(ids)):
            rel = set(related[ids[a]])
            for b in range(a + 1, len(ids)):
                if ids[b] not in rel:
                    transitive = False
                    break
            if not transitive:
                break
        if not transitive:
            break
    return ThetaClasses(graph, classes, transitive)


def _side_is_convex(dist, side: set[int], other: Sequence[int]) -> bool:
    inside = sorted(side)
    for ai, x in enumerate(inside):
        for y in inside[ai + 1:]:
            d = dist[x][y]
            for z in other:
                if dist[x][z] + dist[z][y] == d:
                    return False
    return True


def is_partial_cube(tc: ThetaClasses) -> bool:
    """Check the Djokovic characterization directly at desk scale.

    Connected (guaranteed by construction), bipartite, the raw relation
    already transitive, every class a proper cut whose removal leaves
    exactly two components, both convex.
    """
    g = tc.graph
    if not is_bipartite(g) or not tc.raw_is_transitive:
        return False
    dist = all_pairs_distances(g)
    for cls in tc.classes:
        # no two class edges may share a vertex
        seen: set[int] = set()
        for u, v in cls:
            if u in seen or v in seen:
                return False
            seen.update((u, v))
        removed = set(cls)
        rest_edges = [e for e in g.edges if e not in removed]
        rest = Graph.from_edges(g.n, rest_edges)
        comps = connected_components(rest)
        if len(comps) != 2:
            return False
        a, b = (set(c) for c in comps)
        if not _side_is_convex(dist, a, sorted(b)):
            return False
        if not _side_is_convex(dist, b, sorted(a)):
            return False
    return True


def theta_removal_coloring(graph: Graph, class_index: int, removed: Sequence[Edge],
                           host: Graph, h_col: Optional[EdgeColoring] = None,
                           budget=None) -> EdgeColoring:
    """Two-palette coloring of (G - X) box H for X inside a theta class.

    G must be a partial cube whose every vertex meets every theta class
    (so each class is a perfect matching and G is r-regular for r the
    class count).  The chosen class becomes color class r of the base
    coloring, the other classes take colors 1..r-1 in order, and the
    nearly-regular product construction does the rest.
    """
    tc = theta_classes(graph)
    if not is_partial_cube(tc):
        raise ValueError("graph is not a partial cube")
    if not tc.every_vertex_in_every_class:
        raise ValueError("some vertex misses a theta class, classes are not perfect matchings")
    if not (0 <= class_index < tc.count):
        raise ValueError(f"class index must be in 0..{tc.count - 1}")
    removed = tuple(sorted(canonical_edge(u, v) for u, v in removed))
    cls = set(tc.classes[class_index])
    if not set(removed) <= cls:
        raise ValueError("removed edges must lie in the chosen theta class")

    r = tc.count
    mapping: dict[Edge, int] = {}
    next_color = 1
    for i, edges in enumerate(tc.classes):
        if i == class_index:
            col = r
        else:
            col = next_color
            next_color += 1
        for e in edges:
            mapping[e] = col
    base = EdgeColoring.from_map(graph, mapping)
    matching = Matching.from_edges(graph, tc.classes[class_index])
    spec = NrgSpec(graph, matching, removed, base)
    return nrg_product_coloring(spec, host, h_col, budget)
