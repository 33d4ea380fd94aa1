import itertools

import pytest
from hypothesis import given, strategies as st

from palettebox.graphs import (
    Graph,
    Matching,
    ProductIndex,
    all_pairs_distances,
    build_generator,
    canonical_edge,
    cartesian_product,
    complete_graph,
    connected_components,
    cycle_graph,
    degree_profile,
    enumerate_perfect_matchings,
    find_perfect_matching,
    hypercube_graph,
    is_bipartite,
    is_connected,
    path_graph,
    petersen_graph,
    remove_edges,
)


def test_canonical_edge_orders_and_rejects_loops():
    assert canonical_edge(3, 1) == (1, 3)
    assert canonical_edge(1, 3) == (1, 3)
    with pytest.raises(ValueError):
        canonical_edge(2, 2)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, ((0, 2),))  # endpoint out of range
    with pytest.raises(ValueError):
        Graph(3, ((1, 0),))  # not canonical
    with pytest.raises(ValueError):
        Graph(3, ((0, 1), (0, 1)))
    with pytest.raises(ValueError):
        Graph(3, ((0, 2), (0, 1)))  # unsorted
    assert Graph.from_edges(3, [(2, 0), (1, 0)]).edges == ((0, 1), (0, 2))


def test_provenance_never_affects_equality():
    a = Graph.from_edges(3, [(0, 1)], "one")
    b = Graph.from_edges(3, [(0, 1)], "two")
    assert a == b


def test_path_and_cycle_shapes():
    p3 = path_graph(3)
    assert p3.n == 3 and p3.edges == ((0, 1), (1, 2))
    c5 = cycle_graph(5)
    assert c5.n == 5 and len(c5.edges) == 5
    assert all(d == 2 for d in c5.degrees)
    with pytest.raises(ValueError):
        cycle_graph(2)
    with pytest.raises(ValueError):
        path_graph(0)


def test_hypercube_shape():
    q3 = hypercube_graph(3)
    assert q3.n == 8
    assert len(q3.edges) == 12
    assert q3.is_regular and q3.max_degree == 3
    assert is_bipartite(q3)


def test_petersen_shape_and_girth():
    g = petersen_graph()
    assert g.n == 10 and len(g.edges) == 15
    assert degree_profile(g) == ((3,), True, 3)
    # girth 5: no 3- or 4-cycles through any vertex pair
    dist = all_pairs_distances(g)
    girth = min(
        dist[u][v] + dist[v][w] + dist[w][u]
        for u, v, w in itertools.combinations(range(10), 3)
        if g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(w, u)
    ) if any(
        g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(w, u)
        for u, v, w in itertools.combinations(range(10), 3)
    ) else None
    assert girth is None  # triangle-free
    squares = [
        (u, v) for u, v in itertools.combinations(range(10), 2)
        if not g.has_edge(u, v) and len(set(g.adjacency[u]) & set(g.adjacency[v])) >= 2
    ]
    assert not squares  # no 4-cycles either
    assert any(  # but 5-cycles exist
        dist[u][v] == 2 and g.has_edge(u, w) and g.has_edge(w, v)
        for u in range(10) for v in range(10) for w in g.adjacency[u]
    )


def test_build_generator_dispatch():
    assert build_generator("cycle", 4) == cycle_graph(4)
    assert build_generator("petersen") == petersen_graph()
    with pytest.raises(ValueError):
        build_generator("wheel", 5)
    with pytest.raises(ValueError):
        build_generator("cycle")


def test_product_index_roundtrip():
    idx = ProductIndex(4, 7)
    for a in range(4):
        for b in range(7):
            assert idx.coords(idx.flat(a, b)) == (a, b)
    with pytest.raises(ValueError):
        idx.flat(4, 0)
    with pytest.raises(ValueError):
        idx.coords(28)


@given(st.integers(2, 6), st.integers(3, 6))
def test_product_size_formulas(n, m):
    g, h = path_graph(n), cycle_graph(m)
    prod = cartesian_product(g, h)
    assert prod.n == g.n * h.n
    assert len(prod.edges) == len(g.edges) * h.n + len(h.edges) * g.n


def test_product_commutes_up_to_pair_swap():
    g, h = path_graph(3), cycle_graph(4)
    gh, hg = cartesian_product(g, h), cartesian_product(h, g)
    fwd = ProductIndex(g.n, h.n)
    rev = ProductIndex(h.n, g.n)
    mapped = {
        canonical_edge(rev.flat(b1, a1), rev.flat(b2, a2))
        for (u, v) in gh.edges
        for (a1, b1), (a2, b2) in [(fwd.coords(u), fwd.coords(v))]
    }
    assert mapped == set(hg.edges)


def test_remove_edges_keeps_vertices():
    c4 = cycle_graph(4)
    sub = remove_edges(c4, [(0, 1)])
    assert sub.n == 4
    assert len(sub.edges) == 3
    with pytest.raises(ValueError):
        remove_edges(c4, [(0, 2)])


def test_matching_validation():
    c4 = cycle_graph(4)
    m = Matching.from_edges(c4, [(0, 1), (2, 3)])
    assert m.is_perfect
    assert m.covered() == frozenset(range(4))
    with pytest.raises(ValueError):
        Matching.from_edges(c4, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        Matching.from_edges(c4, [(0, 2)])


def test_find_perfect_matching_lexicographic():
    c6 = cycle_graph(6)
    m = find_perfect_matching(c6)
    assert m.edges == ((0, 1), (2, 3), (4, 5))
    assert find_perfect_matching(cycle_graph(5)) is None
    assert find_perfect_matching(petersen_graph()) is not None


def test_find_perfect_matching_agrees_with_enumeration():
    for g in (path_graph(4), cycle_graph(6), hypercube_graph(3),
              complete_graph(4), petersen_graph(), path_graph(5)):
        found = find_perfect_matching(g)
        all_pms = list(enumerate_perfect_matchings(g))
        if found is None:
            assert not all_pms
        else:
            assert all_pms and all_pms[0].edges == found.edges
            assert sorted(pm.edges for pm in all_pms) == [pm.edges for pm in all_pms]


def test_hypercube_has_r_factorization_structure():
    q4 = hypercube_graph(4)
    m = find_perfect_matching(q4)
    assert m is not None and m.is_perfect


def test_traversal_helpers():
    c4 = cycle_graph(4)
    assert is_connected(c4)
    assert connected_components(remove_edges(c4, [(0, 1), (1, 2), (2, 3), (0, 3)])) == [
        [0], [1], [2], [3]]
    assert is_bipartite(c4)
    assert not is_bipartite(cycle_graph(5))
    assert is_connected(Graph(0, ()))


def test_degree_profile_examples():
    assert degree_profile(path_graph(4)) == ((1, 2), False, 2)
    assert degree_profile(cycle_graph(6)) == ((2,), True, 2)
