from ctdom.graph import build_graph, make_named_graph
from ctdom.oracles import (
    adjacency,
    all_distances,
    is_semitotal_dominating,
    is_total_dominating,
    naive_contains_induced,
    naive_find,
    naive_friendly,
    naive_gamma,
    naive_satisfiable,
)
from ctdom.reductions.formula import Flavor, Formula


def test_gamma_values():
    assert naive_gamma(make_named_graph("C6"), True) == 4
    assert naive_gamma(make_named_graph("C6"), False) == 3
    assert naive_gamma(make_named_graph("P6"), False) == 3


def test_definitions():
    P6 = make_named_graph("P6")
    adj = adjacency(P6)
    dist = all_distances(adj)
    assert is_semitotal_dominating(adj, dist, {1, 3, 5})
    assert not is_total_dominating(adj, {1, 3, 5})
    assert all_distances(adjacency(make_named_graph("2K1")))[0][1] == float("inf")


def test_shapes():
    P5 = make_named_graph("P5")
    assert naive_find(P5, {0, 1, 2, 4}, "O4") == (0, 1, 2, 4)
    G = build_graph(7, [(0, 1), (1, 2), (2, 3), (4, 3), (5, 4), (6, 5)])
    w = naive_find(G, {0, 1, 3, 5, 6}, "O3")
    assert w[2] == w[5] == 3
    assert naive_friendly(make_named_graph("P4"), {0, 2, 3})
    assert not naive_friendly(make_named_graph("C6"), {0, 2, 4})


def test_induced_and_sat():
    assert naive_contains_induced(make_named_graph("P6"), make_named_graph("P5"))
    assert not naive_contains_induced(make_named_graph("C5"), make_named_graph("K1,3"))
    assert naive_satisfiable(Formula(3, ((1, 2, 3),), Flavor.NAE_POSITIVE))
    every_sign = tuple((a * 1, b * 2, c * 3) for a in (1, -1) for b in (1, -1) for c in (1, -1))
    assert not naive_satisfiable(Formula(3, every_sign, Flavor.STANDARD_3SAT))
