"""Layered colorings of Cartesian products with known palette counts.

Each construction colors the fibers of one factor layer by layer and
threads the other factor's edges ("rungs") through leftover colors, so
the palette of every vertex is known pointwise.  Properness and palette
counts are rechecked by the verification suites rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from palettebox.coloring import EdgeColoring, check_proper
from palettebox.graphs import (
    Edge,
    Graph,
    Matching,
    ProductIndex,
    canonical_edge,
    cartesian_product,
    connected_components,
    cycle_graph,
    find_perfect_matching,
    is_connected,
    path_graph,
    remove_edges,
)
from palettebox.search import BUDGET
from palettebox.solver import chromatic_index
from palettebox.torus import torus_three_palette_coloring


def _require_exact_colors(coloring: EdgeColoring, colors: set[int], what: str):
    ok, witness = check_proper(coloring)
    if not ok:
        raise ValueError(f"{what} is not proper: clash at vertex {witness[0]}")
    used = set(coloring.used_colors())
    if used != colors:
        raise ValueError(f"{what} must use colors {sorted(colors)} exactly, got {sorted(used)}")


class BudgetExhausted(RuntimeError):
    """Raised when the search budget runs out before a step is classified."""


def _solve_exact(graph: Graph, budget=None):
    result = chromatic_index(graph, budget)
    if result.status != "exact":
        raise BudgetExhausted(f"could not classify {graph.tag} within the search budget")
    return result


def _missing_color(palette: frozenset[int], limit: int) -> int:
    """Smallest color in [limit] not present in the palette."""
    for c in range(1, limit + 1):
        if c not in palette:
            return c
    raise ValueError(f"palette {sorted(palette)} already covers [{limit}]")


# ---------------------------------------------------------------------------
# products with a class-1 factor


def class1_product_coloring(g_col: EdgeColoring, h_col: EdgeColoring,
                            c: Optional[int] = None) -> EdgeColoring:
    """Color G box H when G is class 1, giving |used colors| = Delta(G)+Delta(H).

    ``g_col`` must be a Delta(G)-coloring.  If ``h_col`` uses exactly
    Delta(H) colors (H class 1), G-fiber edges are shifted by Delta(H).
    If it uses Delta(H)+1 colors (H class 2), the G-color class ``c``
    (default Delta(G)) is instead sent, in the copy of G at H-vertex z,
    to the color of [Delta(H)+1] missing from z's h-palette, and the
    remaining classes shift by Delta(H)+1.  When both factors are regular
    every palette equals [Delta(G)+Delta(H)].
    """
    g, h = g_col.graph, h_col.graph
    dg, dh = g.max_degree, h.max_degree
    _require_exact_colors(g_col, set(range(1, dg + 1)), "g")
    h_used = set(h_col.used_colors())
    if h_used == set(range(1, dh + 1)):
        class_two = False
    elif h_used == set(range(1, dh + 2)):
        class_two = True
    else:
        raise ValueError(
            f"h must use [{dh}] or [{dh + 1}] exactly, got colors {sorted(h_used)}")
    ok, witness = check_proper(h_col)
    if not ok:
        raise ValueError(f"h is not proper: clash at vertex {witness[0]}")
    if not class_two:
        if c is not None:
            raise ValueError("c applies only when h uses Delta(H)+1 colors")
    else:
        if c is None:
            c = dg
        if not (1 <= c <= dg):
            raise ValueError(f"c must be one of g's colors 1..{dg}, got {c}")

    idx = ProductIndex(g.n, h.n)
    mapping: dict[Edge, int] = {}
    for (x, y), col in zip(h.edges, h_col.colors):
        for a in range(g.n):
            mapping[canonical_edge(idx.flat(a, x), idx.flat(a, y))] = col
    if not class_two:
        for (u, v), col in zip(g.edges, g_col.colors):
            for b in range(h.n):
                mapping[canonical_edge(idx.flat(u, b), idx.flat(v, b))] = col + dh
    else:
        spare = [_missing_color(h_col.palette(z), dh + 1) for z in range(h.n)]
        for (u, v), col in zip(g.edges, g_col.colors):
            for b in range(h.n):
                shifted = spare[b] if col == c else col + dh + 1
                mapping[canonical_edge(idx.flat(u, b), idx.flat(v, b))] = shifted
    return EdgeColoring.from_map(cartesian_product(g, h), mapping)


# ---------------------------------------------------------------------------
# nearly regular factors


@dataclass(frozen=True)
class NrgSpec:
    """Recipe for a class-1 nearly regular graph G' - X.

    ``g_prime`` is a connected r-regular graph, ``matching`` a perfect
    matching of it, and ``removed`` a nonempty proper subset of the
    matching.  ``base`` is a proper r-coloring of G' whose color class r
    is exactly the matching, which witnesses both that G' is class 1 and
    that G' minus the matching is.
    """

    g_prime: Graph
    matching: Matching
    removed: tuple[Edge, ...]
    base: EdgeColoring

    def __post_init__(self):
        g = self.g_prime
        if not g.is_regular or g.max_degree < 1:
            raise ValueError("g_prime must be regular and have edges")
        if not is_connected(g):
            raise ValueError("g_prime must be connected")
        if self.matching.host is not g and (self.matching.host.n != g.n
                                            or self.matching.host.edges != g.edges):
            raise ValueError("matching must live on g_prime")
        if not self.matching.is_perfect:
            raise ValueError("matching must be perfect")
        removed = set(self.removed)
        if not removed or not removed < set(self.matching.edges):
            raise ValueError("removed edges must form a nonempty proper subset of the matching")
        r = g.max_degree
        _require_exact_colors(self.base, set(range(1, r + 1)), "base coloring")
        if self.base.graph.edges != g.edges:
            raise ValueError("base coloring must color g_prime")
        class_r = {e for e, col in zip(g.edges, self.base.colors) if col == r}
        if class_r != set(self.matching.edges):
            raise ValueError("color class r of the base coloring must equal the matching")

    @property
    def degree(self) -> int:
        return self.g_prime.max_degree

    @property
    def graph(self) -> Graph:
        """The nearly regular graph itself."""
        return remove_edges(self.g_prime, self.removed)


def make_nrg_spec(g_prime: Graph, removed: Sequence[Edge],
                  matching: Optional[Matching] = None, budget=None) -> NrgSpec:
    """Assemble an NrgSpec, finding the matching and base coloring if needed.

    Without an explicit matching, the lexicographically least perfect
    matching containing the removed edges is used.  The base coloring is
    found by coloring G' minus the matching with r-1 colors; failure
    there means the matching does not qualify.
    """
    removed = tuple(sorted(canonical_edge(u, v) for u, v in removed))
    if matching is None:
        matching = _matching_through(g_prime, removed)
        if matching is None:
            raise ValueError("no perfect matching contains the removed edges")
    rest = remove_edges(g_prime, matching.edges)
    r = g_prime.max_degree
    result = _solve_exact(rest, budget)
    if result.value != r - 1:
        raise ValueError("g_prime minus the matching is not class 1, so the matching does not qualify")
    mapping = result.witness.as_map()
    for e in matching.edges:
        mapping[e] = r
    base = EdgeColoring.from_map(g_prime, mapping)
    return NrgSpec(g_prime, matching, removed, base)


def _matching_through(graph: Graph, forced: Sequence[Edge]) -> Optional[Matching]:
    """Lexicographically least perfect matching containing the forced edges."""
    used = set()
    for u, v in forced:
        if u in used or v in used:
            return None
        used.update((u, v))
    sub_vertices = [v for v in range(graph.n) if v not in used]
    relabel = {v: i for i, v in enumerate(sub_vertices)}
    sub_edges = [(relabel[u], relabel[v]) for u, v in graph.edges
                 if u not in used and v not in used]
    sub = Graph.from_edges(len(sub_vertices), sub_edges)
    rest = find_perfect_matching(sub)
    if rest is None:
        return None
    back = {i: v for v, i in relabel.items()}
    edges = list(forced) + [canonical_edge(back[u], back[v]) for u, v in rest.edges]
    return Matching.from_edges(graph, edges)


def nrg_product_coloring(spec: NrgSpec, host: Graph,
                         h_col: Optional[EdgeColoring] = None, budget=None) -> EdgeColoring:
    """Two-palette coloring of (G' - X) box H for regular H.

    H-fiber edges keep h's colors.  G-fiber edges move their base color j
    up by r' = deg(H), except that when h is a class-2 (r'+1)-coloring,
    class 1 is instead sent, per H-vertex z, to the single color of
    [r'+1] missing at z.  The removed edges all sat in class r, so full
    vertices see the palette [r+r'] and the removal endpoints see
    [r+r'-1]: exactly two palettes.
    """
    if not host.is_regular or host.max_degree < 1:
        raise ValueError("H must be regular with at least one edge")
    rp = host.max_degree
    if h_col is None:
        result = _solve_exact(host, budget)
        h_col = result.witness
    if h_col.graph.n != host.n or h_col.graph.edges != host.edges:
        raise ValueError("h must color H")
    h_used = set(h_col.used_colors())
    if h_used == set(range(1, rp + 1)):
        class_two = False
    elif h_used == set(range(1, rp + 2)):
        class_two = True
    else:
        raise ValueError(f"h must use [{rp}] or [{rp + 1}] exactly, got {sorted(h_used)}")
    ok, witness = check_proper(h_col)
    if not ok:
        raise ValueError(f"h is not proper: clash at vertex {witness[0]}")

    nrg = spec.graph
    idx = ProductIndex(nrg.n, host.n)
    base_map = spec.base.as_map()
    mapping: dict[Edge, int] = {}
    for (x, y), col in zip(host.edges, h_col.colors):
        for a in range(nrg.n):
            mapping[canonical_edge(idx.flat(a, x), idx.flat(a, y))] = col
    spare = None
    if class_two:
        spare = [_missing_color(h_col.palette(z), rp + 1) for z in range(host.n)]
    for (u, v) in nrg.edges:
        j = base_map[(u, v)]
        for b in range(host.n):
            col = spare[b] if class_two and j == 1 else j + rp
            mapping[canonical_edge(idx.flat(u, b), idx.flat(v, b))] = col
    return EdgeColoring.from_map(cartesian_product(nrg, host), mapping)


# ---------------------------------------------------------------------------
# cycles and paths times regular graphs


def _regular_class2_colorings(g: Graph, g_col: Optional[EdgeColoring],
                              h_col: Optional[EdgeColoring], budget=None):
    if not g.is_regular or g.max_degree < 1:
        raise ValueError("G must be regular with at least one edge")
    r = g.max_degree
    if g_col is None:
        result = _solve_exact(g, budget)
        if result.value == r:
            raise ValueError("G is class 1; use class1_product_coloring or the class-1 path route")
        g_col = result.witness
    _require_exact_colors(g_col, set(range(1, r + 2)), "g")
    if g_col.graph.edges != g.edges or g_col.graph.n != g.n:
        raise ValueError("g must color G")
    if h_col is None:
        h_col = g_col
    ok, witness = check_proper(h_col)
    if not ok:
        raise ValueError(f"h is not proper: clash at vertex {witness[0]}")
    if h_col.graph.edges != g.edges or h_col.graph.n != g.n:
        raise ValueError("h must color G")
    banned = {r + 2, r + 3} & set(h_col.used_colors())
    if banned:
        raise ValueError(f"h must avoid colors {r + 2} and {r + 3}, uses {sorted(banned)}")
    return r, g_col, h_col


def _layered_rung_coloring(s: int, g: Graph, r: int, g_col: EdgeColoring,
                           h_col: EdgeColoring, wrap: bool) -> EdgeColoring:
    """Shared body of the cycle and path constructions for class-2 G.

    Layers 0..s-2 carry g, layer s-1 carries h.  The rung between layers
    i and i+1 at G-vertex v takes v's missing g-color for even i and
    r+2 for odd i; the wraparound rung (cycle only) takes r+3.
    """
    layers = cycle_graph(s) if wrap else path_graph(s)
    product = cartesian_product(layers, g)
    idx = ProductIndex(s, g.n)
    missing = [_missing_color(g_col.palette(v), r + 1) for v in range(g.n)]
    mapping: dict[Edge, int] = {}
    for (u, v) in g.edges:
        for i in range(s - 1):
            mapping[canonical_edge(idx.flat(i, u), idx.flat(i, v))] = g_col.color_of(u, v)
        mapping[canonical_edge(idx.flat(s - 1, u), idx.flat(s - 1, v))] = h_col.color_of(u, v)
    for v in range(g.n):
        for i in range(s - 1):
            col = missing[v] if i % 2 == 0 else r + 2
            mapping[canonical_edge(idx.flat(i, v), idx.flat(i + 1, v))] = col
        if wrap:
            mapping[canonical_edge(idx.flat(s - 1, v), idx.flat(0, v))] = r + 3
    return EdgeColoring.from_map(product, mapping)


def cycle_times_regular_coloring(s: int, g: Graph, g_col: Optional[EdgeColoring] = None,
                                 h_col: Optional[EdgeColoring] = None,
                                 budget=None) -> EdgeColoring:
    """Color C_s box G for odd s and class-2 regular G.

    ``g_col`` is an (r+1)-coloring of G (solved if omitted); ``h_col``
    is any proper coloring of G avoiding colors r+2 and r+3, ideally one
    with few palettes (defaults to g_col).  The result has the palettes
    [r+2] on interior layers, [r+1] + {r+3} on layer 0, and
    P_h(v) + {r+2, r+3} on layer s-1, hence at most 2 + palettes(h)
    distinct palettes.
    """
    if s < 3 or s % 2 == 0:
        raise ValueError("s must be odd and at least 3 (for even s use class1_product_coloring)")
    r, g_col, h_col = _regular_class2_colorings(g, g_col, h_col, budget)
    return _layered_rung_coloring(s, g, r, g_col, h_col, wrap=True)


def path_times_regular_coloring(s: int, g: Graph, g_col: Optional[EdgeColoring] = None,
                                h_col: Optional[EdgeColoring] = None,
                                budget=None) -> EdgeColoring:
    """Color P_s box G for odd s and class-2 regular G.

    Like the cycle construction without the wraparound rung: palettes are
    [r+2] inside, [r+1] on layer 0, and P_h(v) + {r+2} on layer s-1.
    """
    if s < 3 or s % 2 == 0:
        raise ValueError("s must be odd and at least 3 (for even s use the nearly-regular route)")
    r, g_col, h_col = _regular_class2_colorings(g, g_col, h_col, budget)
    return _layered_rung_coloring(s, g, r, g_col, h_col, wrap=False)


def path_times_class1_regular_coloring(s: int, g: Graph, c: Optional[int] = None,
                                       g_col: Optional[EdgeColoring] = None,
                                       budget=None) -> EdgeColoring:
    """Two-palette coloring of P_s box G for odd s and class-1 regular G.

    G's r-coloring is shifted to the colors 3..r+2 and rungs alternate
    colors 1, 2 along the path.  On layer 0 the class ``c`` (default
    r+2) is recolored 2 and on layer s-1 it is recolored 1, so both end
    layers show the palette {1,2} + (P_g(v) minus c) while interior
    layers show [r+2]: exactly two palettes.
    """
    if s < 3 or s % 2 == 0:
        raise ValueError("s must be odd and at least 3 (even s pairs with a class-1 factor directly)")
    if not g.is_regular or g.max_degree < 1:
        raise ValueError("G must be regular with at least one edge")
    r = g.max_degree
    if g_col is None:
        result = _solve_exact(g, budget)
        if result.value != r:
            raise ValueError("G is class 2; use path_times_regular_coloring")
        g_col = result.witness
    _require_exact_colors(g_col, set(range(1, r + 1)), "g")
    if g_col.graph.edges != g.edges or g_col.graph.n != g.n:
        raise ValueError("g must color G")
    shifted = {e: col + 2 for e, col in g_col.as_map().items()}
    if c is None:
        c = r + 2
    if not (3 <= c <= r + 2):
        raise ValueError(f"c must be one of the shifted colors 3..{r + 2}, got {c}")

    product = cartesian_product(path_graph(s), g)
    idx = ProductIndex(s, g.n)
    mapping: dict[Edge, int] = {}
    for e, col in shifted.items():
        u, v = e
        for i in range(s):
            if i == 0:
                layer_col = 2 if col == c else col
            elif i == s - 1:
                layer_col = 1 if col == c else col
            else:
                layer_col = col
            mapping[canonical_edge(idx.flat(i, u), idx.flat(i, v))] = layer_col
    for v in range(g.n):
        for i in range(s - 1):
            mapping[canonical_edge(idx.flat(i, v), idx.flat(i + 1, v))] = 1 if i % 2 == 0 else 2
    return EdgeColoring.from_map(product, mapping)


# ---------------------------------------------------------------------------
# cubic factors via perfect matching removal


#: Shared target palettes for every component block of the path-mode
#: reduction.  Odd-cycle components need four palettes and no four-set
#: family containing the {1,2,3,4}/{1,3,4}/{2,3,4} triple of the plain
#: class-1 product coloring admits them, so even components are searched
#: into this family as well.  Found as the palette family of a minimum
#: coloring of P_3 box C_3 and checked against all blocks up to
#: P_7 box C_7 at desk scale.
PATH_MODE_FAMILY = (
    frozenset({1, 2, 3, 4}),
    frozenset({1, 3, 4}),
    frozenset({1, 3, 5}),
    frozenset({2, 4, 5}),
)


def _component_cycle_order(rest: Graph, comp: list[int]) -> list[int]:
    """Vertices of a 2-regular component in cycle order, deterministically.

    Starts at the least vertex and moves to its least neighbour first.
    """
    start = comp[0]
    order = [start]
    prev = None
    here = start
    while True:
        nbrs = [w for w in rest.adjacency[here] if w != prev]
        nxt = min(nbrs) if prev is None else nbrs[0]
        if nxt == start:
            break
        order.append(nxt)
        prev, here = here, nxt
    return order


def _even_cycle_two_coloring(order: list[int]) -> dict[Edge, int]:
    k = len(order)
    out = {}
    for j in range(k):
        e = canonical_edge(order[j], order[(j + 1) % k])
        out[e] = 1 + (j % 2)
    return out


def _torus_component_map(s: int, order: list[int], col: EdgeColoring,
                         idx: ProductIndex) -> dict[Edge, int]:
    """Pull a torus coloring back onto the layers of one odd component.

    The component's product with the layer cycle is isomorphic to
    C_max box C_min; vertices map as (layer, position) or transposed.
    """
    k = len(order)
    big, small = max(s, k), min(s, k)
    tidx = ProductIndex(big, small)

    def torus_flat(layer: int, pos: int) -> int:
        return tidx.flat(layer, pos) if s >= k else tidx.flat(pos, layer)

    out: dict[Edge, int] = {}
    for j in range(k):
        u, v = order[j], order[(j + 1) % k]
        for i in range(s):
            key = canonical_edge(torus_flat(i, j), torus_flat(i, (j + 1) % k))
            out[canonical_edge(idx.flat(i, u), idx.flat(i, v))] = col.color_of(*key)
    for j in range(k):
        v = order[j]
        for i in range(s):
            key = canonical_edge(torus_flat(i, j), torus_flat((i + 1) % s, j))
            out[canonical_edge(idx.flat(i, v), idx.flat((i + 1) % s, v))] = col.color_of(*key)
    return out


def cubic_matching_reduction(s: int, g: Graph, matching: Optional[Matching] = None,
                             mode: str = "cycle", budget=None) -> EdgeColoring:
    """Color C_s box G (or P_s box G) for odd s and class-2 cubic G.

    Removing a perfect matching from G leaves disjoint cycles, so the
    product minus the matching fibers splits into C_s box C_k blocks.
    In cycle mode even blocks get the flat {1,2,3,4} coloring and odd
    blocks the three-palette torus coloring; in path mode every block is
    searched into the shared PATH_MODE_FAMILY.  The matching fibers, a
    perfect matching of the product, then take one fresh color.  Cycle
    mode ends with at most 3 distinct palettes, path mode with at most 4.
    """
    if s < 3 or s % 2 == 0:
        raise ValueError("s must be odd and at least 3")
    if mode not in ("cycle", "path"):
        raise ValueError(f"mode must be 'cycle' or 'path', got {mode!r}")
    if set(g.degrees) != {3}:
        raise ValueError("G must be cubic")
    result = _solve_exact(g, budget)
    if result.value == 3:
        raise ValueError("G is class 1; use class1_product_coloring or the class-1 path route")
    if matching is None:
        matching = find_perfect_matching(g)
        if matching is None:
            raise ValueError("G has no perfect matching")
    if matching.host.edges != g.edges or not matching.is_perfect:
        raise ValueError("need a perfect matching of G")

    rest = remove_edges(g, matching.edges)
    layers = cycle_graph(s) if mode == "cycle" else path_graph(s)
    idx = ProductIndex(s, g.n)
    mapping: dict[Edge, int] = {}
    h_col = None
    if mode == "cycle":
        s_col = {canonical_edge(j, j + 1): 1 + (j % 2) for j in range(s - 1)}
        s_col[canonical_edge(s - 1, 0)] = 3
        h_col = EdgeColoring.from_map(cycle_graph(s), s_col)

    for comp in connected_components(rest):
        if len(comp) == 1:
            raise ValueError("removing the matching left an isolated vertex; G is not cubic")
        order = _component_cycle_order(rest, comp)
        k = len(order)
        if mode == "path":
            block = _family_block_coloring(s, order, idx, budget)
        elif k % 2 == 0:
            block = _flat_block_coloring(s, order, h_col, idx)
        else:
            col = torus_three_palette_coloring(max(s, k), min(s, k))
            block = _torus_component_map(s, order, col, idx)
        mapping.update(block)

    rest_product_edges = set(mapping)
    base_graph = Graph.from_edges(idx.g_size * idx.h_size, rest_product_edges,
                                  f"product({layers.tag},{rest.tag})")
    base = EdgeColoring.from_map(base_graph, mapping)
    full = cartesian_product(layers, g)
    fiber_edges = [canonical_edge(idx.flat(i, u), idx.flat(i, v))
                   for (u, v) in matching.edges for i in range(s)]
    fiber = Matching.from_edges(full, fiber_edges)
    color = 7 if mode == "cycle" else None
    return extend_coloring_by_matching(base, fiber, color)


def _flat_block_coloring(s: int, order: list[int], h_col: EdgeColoring,
                         idx: ProductIndex) -> dict[Edge, int]:
    """Even component in cycle mode: every palette is {1,2,3,4}.

    This is the class-2 branch of the class-1 product coloring with the
    component 2-colored and c = 2: class 2 drops into the layer cycle's
    missing color, class 1 shifts to 4, rungs keep the 3-coloring h_col.
    """
    k = len(order)
    two = _even_cycle_two_coloring(order)
    spare = [_missing_color(h_col.palette(i), 3) for i in range(s)]
    out: dict[Edge, int] = {}
    for e, col in two.items():
        u, v = e
        for i in range(s):
            out[canonical_edge(idx.flat(i, u), idx.flat(i, v))] = spare[i] if col == 2 else 4
    for j in range(k):
        v = order[j]
        for i in range(s - 1):
            out[canonical_edge(idx.flat(i, v), idx.flat(i + 1, v))] = h_col.color_of(i, i + 1)
        out[canonical_edge(idx.flat(s - 1, v), idx.flat(0, v))] = h_col.color_of(s - 1, 0)
    return out


def _family_block_coloring(s: int, order: list[int], idx: ProductIndex,
                           budget=None) -> dict[Edge, int]:
    """Path-mode component: search a coloring inside PATH_MODE_FAMILY."""
    from palettebox.oracle import coloring_within_family

    k = len(order)
    block = cartesian_product(path_graph(s), cycle_graph(k))
    status, col = coloring_within_family(block, PATH_MODE_FAMILY, budget)
    if status == BUDGET:
        raise BudgetExhausted(
            f"family search on P_{s} box C_{k} exceeded its budget; rerun with a larger one")
    if col is None:
        raise RuntimeError(
            f"P_{s} box C_{k} admits no coloring with palettes in {_family_repr()}")
    bidx = ProductIndex(s, k)
    out: dict[Edge, int] = {}
    for j in range(k):
        u, v = order[j], order[(j + 1) % k]
        for i in range(s):
            key = canonical_edge(bidx.flat(i, j), bidx.flat(i, (j + 1) % k))
            out[canonical_edge(idx.flat(i, u), idx.flat(i, v))] = col.color_of(*key)
    for j in range(k):
        v = order[j]
        for i in range(s - 1):
            key = canonical_edge(bidx.flat(i, j), bidx.flat(i + 1, j))
            out[canonical_edge(idx.flat(i, v), idx.flat(i + 1, v))] = col.color_of(*key)
    return out


def _family_repr() -> str:
    return "{" + ", ".join(sorted(str(sorted(p)) for p in PATH_MODE_FAMILY)) + "}"


def extend_coloring_by_matching(base: EdgeColoring, fiber: Matching,
                                color: Optional[int]) -> EdgeColoring:
    from palettebox.coloring import extend_by_matching

    return extend_by_matching(base, fiber, color)
