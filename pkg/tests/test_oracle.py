import pytest
from hypothesis import given, settings, strategies as st

from palettebox.coloring import check_proper, palette_summary
from palettebox.graphs import (
    Graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    path_graph,
)
from palettebox.oracle import (
    certify,
    coloring_within_family,
    lower_bound,
    naive_minimum_palettes,
    palette_index_exact,
)
from palettebox.search import EXHAUSTED, FOUND, SearchBudget
from palettebox.solver import chromatic_index


@pytest.mark.parametrize("n, expected", [(3, 3), (4, 2), (5, 3), (6, 2), (7, 3)])
def test_paths_alternate_by_parity(n, expected):
    cert = palette_index_exact(path_graph(n))
    assert cert.exact and cert.lower == expected


@pytest.mark.parametrize("n, expected", [(4, 1), (5, 3), (6, 1), (7, 3)])
def test_cycles_alternate_by_parity(n, expected):
    cert = palette_index_exact(cycle_graph(n))
    assert cert.exact and cert.lower == expected


@pytest.mark.parametrize("spec, expected", [
    ((2, 2), 1),
    ((2, 3), 2),
    ((3, 3), 5),
])
def test_small_grid_values(spec, expected):
    a, b = spec
    g = cartesian_product(path_graph(a), path_graph(b))
    cert = palette_index_exact(g)
    assert cert.exact and cert.lower == expected


def test_complete_graph_values():
    assert palette_index_exact(complete_graph(4)).lower == 1
    cert = palette_index_exact(complete_graph(5))
    assert cert.exact and cert.lower == 4


def test_certificate_carries_witness():
    cert = palette_index_exact(cycle_graph(5))
    assert cert.rule
    assert cert.witness is not None
    assert check_proper(cert.witness)[0]
    assert palette_summary(cert.witness).count == cert.upper


def test_lower_bound_rules():
    value, rule = lower_bound(path_graph(4))
    assert value == 2 and rule == "degree-set"
    value, rule = lower_bound(cycle_graph(5))
    assert value == 3 and rule == "regular-class2"
    value, rule = lower_bound(cycle_graph(4))
    assert value == 1 and rule == "degree-set"


def test_regular_graphs_skip_two_palettes():
    # a regular graph with palette index 2 is impossible; the search
    # must still terminate with the right answer above it
    cert = palette_index_exact(cycle_graph(7))
    assert cert.exact and cert.lower == 3


def test_budget_exhaustion_yields_interval():
    g = cartesian_product(path_graph(3), path_graph(3))
    cert = palette_index_exact(g, budget=SearchBudget(max_nodes=3))
    assert not cert.exact
    lo, hi = cert.interval
    assert lo >= 1 and (hi is None or hi >= lo)


def test_certify_uses_candidate_witnesses():
    g = cycle_graph(5)
    col = chromatic_index(g).witness
    cert = certify(g, [col])
    assert cert.lower == 3 and cert.upper == 3 and cert.exact


def test_certify_rejects_foreign_colorings():
    g = cycle_graph(5)
    col = chromatic_index(cycle_graph(7)).witness
    with pytest.raises(ValueError):
        certify(g, [col])


def test_coloring_within_family():
    g = cycle_graph(4)
    status, col = coloring_within_family(g, [frozenset({1, 2})])
    assert status == FOUND
    assert palette_summary(col).palette_sets() == {frozenset({1, 2})}
    c5 = cycle_graph(5)
    status, col = coloring_within_family(c5, [frozenset({1, 2})])
    assert status == EXHAUSTED and col is None


def test_naive_oracle_known_values():
    assert naive_minimum_palettes(path_graph(4)) == 2
    assert naive_minimum_palettes(path_graph(5)) == 3
    assert naive_minimum_palettes(cycle_graph(5)) == 3
    assert naive_minimum_palettes(complete_graph(4)) == 1
    assert naive_minimum_palettes(Graph(2, ((0, 1),))) == 1


@settings(max_examples=15, deadline=None)
@given(st.data())
def test_oracles_agree_on_random_graphs(data):
    n = data.draw(st.integers(2, 5))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(possible), min_size=1))
    g = Graph.from_edges(n, sorted(chosen))
    cert = palette_index_exact(g)
    assert cert.exact
    assert cert.lower == naive_minimum_palettes(g)
