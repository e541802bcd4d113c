import itertools

import pytest

from ctdom.domination import (
    DomKind,
    SolverBudget,
    enumerate_dom_sets,
    gamma,
    gamma_by_enumeration,
    is_dom_set,
    min_dom_set,
    private_neighborhood,
    witnesses,
)
from ctdom.errors import IsolatedVertex, NotInSet, Timeout
from ctdom.graph import build_graph, make_named_graph, random_connected_graph, to_mask
from ctdom.oracles import naive_gamma

T, S = DomKind.TOTAL, DomKind.SEMITOTAL


def test_is_dom_set():
    P3 = make_named_graph("P3")
    assert not is_dom_set(P3, to_mask([1]), T)
    assert is_dom_set(P3, to_mask([0, 1]), T)
    P6 = make_named_graph("P6")
    assert is_dom_set(P6, to_mask([1, 3, 5]), S)
    assert not is_dom_set(P6, to_mask([1, 3, 5]), T)


@pytest.mark.parametrize(
    "name, kind, value",
    [("K1,3", T, 2), ("P4", T, 2), ("C6", T, 4), ("P6", S, 3), ("C6", S, 3)],
)
def test_gamma_values(name, kind, value):
    assert gamma(make_named_graph(name), kind) == value


def test_isolated_vertex():
    G = build_graph(3, [(0, 1)])
    for kind in (T, S):
        with pytest.raises(IsolatedVertex):
            gamma(G, kind)


def test_enumerate():
    P3, P4 = make_named_graph("P3"), make_named_graph("P4")
    assert list(enumerate_dom_sets(P3, T, 2)) == [to_mask([0, 1]), to_mask([1, 2])]
    assert list(enumerate_dom_sets(P4, T, 2)) == [to_mask([1, 2])]
    assert list(enumerate_dom_sets(make_named_graph("C6"), T, 3)) == []


def test_enumerate_matches_combinations():
    G = random_connected_graph(8, 0.35, 9)
    for kind in (T, S):
        g = gamma(G, kind)
        for size in (g, g + 1):
            got = list(enumerate_dom_sets(G, kind, size))
            want = [to_mask(c) for c in itertools.combinations(range(G.n), size) if is_dom_set(G, to_mask(c), kind)]
            assert got == want and got


def test_private_neighborhood():
    P4 = make_named_graph("P4")
    D = to_mask([1, 2])
    assert private_neighborhood(P4, D, 1) == to_mask([0, 2])
    assert private_neighborhood(P4, D, 2) == to_mask([1, 3])
    # in K_n each of two chosen vertices is the other's only D-neighbour
    K5 = make_named_graph("K5")
    assert private_neighborhood(K5, to_mask([0, 1]), 0) == to_mask([1])
    assert private_neighborhood(K5, to_mask([0, 1]), 1) == to_mask([0])
    star = make_named_graph("K1,4")
    assert private_neighborhood(star, to_mask([0]), 0) == to_mask([1, 2, 3, 4])
    with pytest.raises(NotInSet):
        private_neighborhood(P4, D, 0)


def test_witnesses():
    assert witnesses(make_named_graph("P6"), to_mask([1, 3, 5]), 1) == to_mask([3])
    assert witnesses(make_named_graph("P4"), to_mask([0, 1]), 0) == to_mask([1])
    assert witnesses(make_named_graph("P4"), to_mask([2]), 2) == 0


def test_solver_agrees_with_oracles():
    for seed in range(25):
        G = random_connected_graph(4 + seed % 7, 0.35, seed)
        for kind in (T, S):
            g = gamma(G, kind)
            assert g == gamma_by_enumeration(G, kind) == naive_gamma(G, kind is T)
        assert gamma(G, T) >= gamma(G, S) >= 2


def test_min_dom_set_is_valid():
    G = random_connected_graph(12, 0.25, 4)
    for kind in (T, S):
        D = min_dom_set(G, kind)
        assert is_dom_set(G, D, kind) and D.bit_count() == gamma(G, kind)


def test_budget_timeout():
    G = random_connected_graph(30, 0.1, 2)
    with pytest.raises(Timeout):
        gamma(G, T, SolverBudget(max_nodes=2))
