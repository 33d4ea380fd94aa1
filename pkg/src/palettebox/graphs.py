"""Immutable simple graphs, standard generators, and Cartesian products.

Vertices of a graph on n vertices are always 0..n-1.  Edges are canonical
ordered pairs (u, v) with u < v, kept in lexicographic order, so equal
graphs have byte-identical edge tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    """Order the endpoints of an edge as (min, max); loops are rejected."""
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph.

    ``provenance`` is a construction tag such as ``cycle(5)`` or
    ``product(cycle(5),cycle(3))``.  It documents where the graph came
    from and never takes part in equality.  Connectivity is not enforced
    anywhere; operations that need it check it themselves.
    """

    n: int
    edges: tuple[Edge, ...]
    provenance: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        prev = None
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e} is not canonical or out of range")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            if prev is not None and e < prev:
                raise ValueError("edges must be sorted lexicographically")
            seen.add(e)
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]],
                   provenance: Optional[str] = None) -> "Graph":
        """Build a graph from any iterable of endpoint pairs."""
        canon = sorted({canonical_edge(u, v) for u, v in edges})
        return cls(n, tuple(canon), provenance)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        """Position of each edge in the canonical edge tuple."""
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edge_set

    def incident_edges(self, v: int) -> tuple[Edge, ...]:
        return tuple(canonical_edge(v, w) for w in self.adjacency[v])

    @property
    def tag(self) -> str:
        return self.provenance if self.provenance is not None else f"graph({self.n})"

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)}, tag={self.tag!r})"


def degree_profile(graph: Graph) -> tuple[tuple[int, ...], bool, int]:
    """Return (sorted distinct degrees, regular flag, maximum degree)."""
    distinct = tuple(sorted(set(graph.degrees)))
    return distinct, len(distinct) <= 1, graph.max_degree


# ---------------------------------------------------------------------------
# generators


def path_graph(n: int) -> Graph:
    """Path on n >= 1 vertices (n-1 edges)."""
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), f"path({n})")


def cycle_graph(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph.from_edges(n, edges, f"cycle({n})")


def complete_graph(n: int) -> Graph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, tuple(edges), f"complete({n})")


def hypercube_graph(r: int) -> Graph:
    """r-dimensional hypercube Q_r, r >= 1, vertices in r-bit binary order."""
    if r < 1:
        raise ValueError("hypercube dimension must be at least 1")
    n = 1 << r
    edges = []
    for u in range(n):
        for b in range(r):
            v = u ^ (1 << b)
            if u < v:
                edges.append((u, v))
    return Graph.from_edges(n, edges, f"hypercube({r})")


def petersen_graph() -> Graph:
    """The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5)."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, i + 5))
    return Graph.from_edges(10, edges, "petersen")


_GENERATORS = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "hypercube": (hypercube_graph, 1),
    "petersen": (petersen_graph, 0),
}


def build_generator(kind: str, *params: int) -> Graph:
    """Dispatch a generator by name; rejects unknown kinds and bad arity."""
    if kind not in _GENERATORS:
        raise ValueError(f"unknown generator kind {kind!r}")
    fn, arity = _GENERATORS[kind]
    if len(params) != arity:
        raise ValueError(f"generator {kind!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# ---------------------------------------------------------------------------
# products and subgraphs


@dataclass(frozen=True)
class ProductIndex:
    """Row-major vertex indexing of a Cartesian product.

    Vertex (a, b) of G box H maps to the flat index a*|V(H)| + b, so the
    H-coordinate varies fastest.
    """

    g_size: int
    h_size: int

    def flat(self, a: int, b: int) -> int:
        if not (0 <= a < self.g_size and 0 <= b < self.h_size):
            raise ValueError(f"product coordinate ({a}, {b}) out of range")
        return a * self.h_size + b

    def coords(self, idx: int) -> tuple[int, int]:
        if not (0 <= idx < self.g_size * self.h_size):
            raise ValueError(f"flat index {idx} out of range")
        return divmod(idx, self.h_size)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product G box H.

    (a,x)(b,y) is an edge iff a=b and xy in E(H), or x=y and ab in E(G).
    Fibers of either factor appear as induced copies, so
    |E| = |E(G)|*|V(H)| + |E(H)|*|V(G)|.
    """
    idx = ProductIndex(g.n, h.n)
    edges = []
    for u, v in g.edges:
        for b in range(h.n):
            edges.append((idx.flat(u, b), idx.flat(v, b)))
    for x, y in h.edges:
        for a in range(g.n):
            edges.append((idx.flat(a, x), idx.flat(a, y)))
    return Graph.from_edges(g.n * h.n, edges, f"product({g.tag},{h.tag})")


def remove_edges(graph: Graph, removed: Iterable[Sequence[int]]) -> Graph:
    """Spanning subgraph with the given edges deleted.

    Every requested edge must exist; vertices are kept even if isolated.
    """
    gone = {canonical_edge(u, v) for u, v in removed}
    missing = gone - graph.edge_set
    if missing:
        raise ValueError(f"edges not present: {sorted(missing)}")
    rest = tuple(e for e in graph.edges if e not in gone)
    label = f"subgraph({graph.tag}, {sorted(gone)})"
    return Graph(graph.n, rest, label)


# ---------------------------------------------------------------------------
# matchings


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of a host graph."""

    host: Graph
    edges: tuple[Edge, ...]

    def __post_init__(self):
        seen: set[int] = set()
        for e in self.edges:
            if e not in self.host.edge_set:
                raise ValueError(f"matching edge {e} is not in the host graph")
            u, v = e
            if u in seen or v in seen:
                raise ValueError(f"matching edges share vertex on {e}")
            seen.update(e)
        if tuple(sorted(self.edges)) != self.edges:
            raise ValueError("matching edges must be sorted")

    @classmethod
    def from_edges(cls, host: Graph, edges: Iterable[Sequence[int]]) -> "Matching":
        return cls(host, tuple(sorted(canonical_edge(u, v) for u, v in edges)))

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.edges) == self.host.n

    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)


def find_perfect_matching(graph: Graph) -> Optional[Matching]:
    """Lexicographically least perfect matching, or None if none exists.

    Depth-first search: repeatedly match the least unmatched vertex to its
    least available neighbour.  Comparing the sorted edge lists of two
    perfect matchings inspects partners in exactly this vertex order, so
    the first matching found is the lexicographically least one.  The scan
    order is fixed, which makes the result deterministic.
    """
    if graph.n % 2 != 0:
        return None
    adj = graph.adjacency
    matched = [False] * graph.n
    chosen: list[Edge] = []

    def extend() -> bool:
        u = next((i for i in range(graph.n) if not matched[i]), None)
        if u is None:
            return True
        matched[u] = True
        for v in adj[u]:
            if not matched[v]:
                matched[v] = True
                chosen.append((u, v))
                if extend():
                    return True
                chosen.pop()
                matched[v] = False
        matched[u] = False
        return False

    if extend():
        return Matching.from_edges(graph, chosen)
    return None


def enumerate_perfect_matchings(graph: Graph):
    """Yield every perfect matching, lexicographically least first.

    Exhaustive; intended for small hosts (fixture sweeps, cross checks).
    """
    if graph.n % 2 != 0:
        return
    adj = graph.adjacency
    matched = [False] * graph.n
    chosen: list[Edge] = []

    def extend():
        u = next((i for i in range(graph.n) if not matched[i]), None)
        if u is None:
            yield Matching.from_edges(graph, chosen)
            return
        matched[u] = True
        for v in adj[u]:
            if not matched[v]:
                matched[v] = True
                chosen.append((u, v))
                yield from extend()
                chosen.pop()
                matched[v] = False
        matched[u] = False

    yield from extend()


# ---------------------------------------------------------------------------
# traversal helpers


def connected_components(graph: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, in order of least vertex."""
    seen = [False] * graph.n
    comps = []
    for s in range(graph.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = [s]
        while queue:
            u = queue.pop()
            for v in graph.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    return len(connected_components(graph)) == 1


def is_bipartite(graph: Graph) -> bool:
    color = [-1] * graph.n
    for s in range(graph.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            for v in graph.adjacency[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def bfs_distances(graph: Graph, source: int) -> list[int]:
    """Distances from source; unreachable vertices get -1."""
    dist = [-1] * graph.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for v in graph.adjacency[u]:
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def all_pairs_distances(graph: Graph) -> list[list[int]]:
    return [bfs_distances(graph, s) for s in range(graph.n)]
