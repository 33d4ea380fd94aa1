import pytest

from palettebox.coloring import check_proper
from palettebox.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    hypercube_graph,
    path_graph,
    petersen_graph,
)
from palettebox.search import SearchBudget
from palettebox.solver import chromatic_index, solver_edge_order


@pytest.mark.parametrize("graph, expected", [
    (path_graph(2), 1),
    (path_graph(5), 2),
    (cycle_graph(4), 2),
    (cycle_graph(5), 3),
    (complete_graph(4), 3),
    (hypercube_graph(3), 3),
    (petersen_graph(), 4),
])
def test_chromatic_index_values(graph, expected):
    res = chromatic_index(graph)
    assert res.status == "exact"
    assert res.value == expected
    assert check_proper(res.witness)[0]
    assert res.witness.max_color <= expected
    assert res.delta == graph.max_degree


def test_class_one_flag():
    assert chromatic_index(cycle_graph(6)).is_class_one
    assert not chromatic_index(cycle_graph(7)).is_class_one


def test_odd_regular_parity_shortcut():
    # K7 is 6-regular on an odd vertex count, so class 2 without search
    res = chromatic_index(complete_graph(7))
    assert res.status == "exact" and res.value == 7
    assert check_proper(res.witness)[0]
    assert res.nodes < 10_000_000


def test_empty_graph():
    res = chromatic_index(Graph(3, ()))
    assert res.status == "exact" and res.value == 0


def test_budget_exhaustion_is_reported():
    res = chromatic_index(petersen_graph(), budget=SearchBudget(max_nodes=2))
    assert res.status == "indeterminate"
    assert res.value is None and res.witness is None


def test_solver_edge_order_prefers_busy_endpoints():
    g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    order = solver_edge_order(g)
    assert sorted(order) == [0, 1, 2]
    assert [g.edges[i] for i in order] == [(2, 3), (3, 4), (0, 1)]
