import pytest
from hypothesis import given, strategies as st

from palettebox.coloring import (
    EdgeColoring,
    check_proper,
    disjoint_product_coloring,
    extend_by_matching,
    palette_summary,
)
from palettebox.graphs import (
    Matching,
    cycle_graph,
    path_graph,
    petersen_graph,
    remove_edges,
)
from palettebox.solver import chromatic_index


def proper_cycle_coloring(n):
    c = cycle_graph(n)
    assert n % 2 == 0
    return EdgeColoring.from_map(
        c, {e: 1 if e[1] - e[0] == 1 and e[0] % 2 == 0 else 2 for e in c.edges})


def test_from_map_requires_exact_domain():
    p3 = path_graph(3)
    with pytest.raises(ValueError):
        EdgeColoring.from_map(p3, {(0, 1): 1})
    with pytest.raises(ValueError):
        EdgeColoring.from_map(p3, {(0, 1): 1, (1, 2): 2, (0, 2): 3})
    with pytest.raises(ValueError):
        EdgeColoring.from_map(p3, {(0, 1): 0, (1, 2): 2})


def test_color_lookup_and_used_colors():
    p3 = path_graph(3)
    col = EdgeColoring.from_map(p3, {(0, 1): 5, (1, 2): 2})
    assert col.color_of(1, 0) == 5
    assert col.used_colors() == frozenset({2, 5})
    assert col.max_color == 5
    assert col.palette(1) == frozenset({2, 5})
    with pytest.raises(KeyError):
        col.color_of(0, 2)


def test_check_proper_reports_first_clash():
    p3 = path_graph(3)
    bad = EdgeColoring.from_map(p3, {(0, 1): 1, (1, 2): 1})
    ok, witness = check_proper(bad)
    assert not ok
    v, e1, e2 = witness
    assert v == 1 and {e1, e2} == {(0, 1), (1, 2)}
    good = EdgeColoring.from_map(p3, {(0, 1): 1, (1, 2): 2})
    assert check_proper(good) == (True, None)


def test_palette_summary_counts():
    col = proper_cycle_coloring(6)
    summary = palette_summary(col)
    assert summary.count == 1
    assert summary.palette_of(0) == frozenset({1, 2})
    assert summary.palette_sets() == {frozenset({1, 2})}


def test_palette_summary_rejects_improper():
    p3 = path_graph(3)
    bad = EdgeColoring.from_map(p3, {(0, 1): 1, (1, 2): 1})
    with pytest.raises(ValueError, match="improper"):
        palette_summary(bad)


@given(st.integers(3, 8))
def test_palette_size_equals_degree(n):
    g = cycle_graph(n) if n % 2 else path_graph(n)
    col = chromatic_index(g).witness
    summary = palette_summary(col)
    for v in range(g.n):
        assert len(summary.palette_of(v)) == g.degrees[v]


def test_extend_by_matching_uses_fresh_color():
    c6 = cycle_graph(6)
    m = Matching.from_edges(c6, [(0, 1), (2, 3), (4, 5)])
    rest = remove_edges(c6, m.edges)
    base = chromatic_index(rest).witness
    extended = extend_by_matching(base, m)
    assert extended.graph == c6
    assert check_proper(extended)[0]
    fresh = extended.max_color
    assert all(extended.color_of(u, v) == fresh for u, v in m.edges)
    # palette count never grows: each vertex gains the same fresh color
    assert palette_summary(extended).count == palette_summary(base).count


def test_extend_by_matching_validation():
    c6 = cycle_graph(6)
    m = Matching.from_edges(c6, [(0, 1), (2, 3), (4, 5)])
    rest = remove_edges(c6, m.edges)
    base = chromatic_index(rest).witness
    with pytest.raises(ValueError):
        extend_by_matching(base, Matching.from_edges(c6, [(0, 1)]))  # not perfect
    with pytest.raises(ValueError):
        extend_by_matching(base, m, color=base.max_color)  # already used
    wrong_host = chromatic_index(path_graph(6)).witness
    with pytest.raises(ValueError):
        extend_by_matching(wrong_host, m)


def test_extend_by_matching_explicit_color():
    c4 = cycle_graph(4)
    m = Matching.from_edges(c4, [(0, 1), (2, 3)])
    base = chromatic_index(remove_edges(c4, m.edges)).witness
    out = extend_by_matching(base, m, color=9)
    assert out.color_of(0, 1) == 9


def test_disjoint_product_offsets_second_factor():
    g_col = chromatic_index(path_graph(3)).witness
    h_col = chromatic_index(cycle_graph(4)).witness
    prod = disjoint_product_coloring(g_col, h_col)
    assert check_proper(prod)[0]
    assert prod.used_colors() == frozenset(
        g_col.used_colors() | {c + g_col.max_color for c in h_col.used_colors()})


@given(st.integers(2, 5), st.integers(3, 5))
def test_disjoint_product_palette_bound(n, m):
    g_col = chromatic_index(path_graph(n)).witness
    h_col = chromatic_index(cycle_graph(m)).witness
    prod = disjoint_product_coloring(g_col, h_col)
    bound = palette_summary(g_col).count * palette_summary(h_col).count
    assert palette_summary(prod).count <= bound


def test_disjoint_product_on_petersen():
    g_col = chromatic_index(petersen_graph()).witness
    h_col = chromatic_index(path_graph(2)).witness
    prod = disjoint_product_coloring(g_col, h_col)
    assert check_proper(prod)[0]
