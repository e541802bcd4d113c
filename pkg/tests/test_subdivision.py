import itertools

import pytest

from ctdom.domination import DomKind, enumerate_dom_sets, gamma, is_dom_set
from ctdom.errors import InvalidInput
from ctdom.graph import four_subdivide, make_named_graph, to_mask
from ctdom.reductions.subdivision import td_transform_down, td_transform_up

T = DomKind.TOTAL


def test_k2_example():
    G = make_named_graph("K2")
    H, path = four_subdivide(G)
    U = td_transform_up(G, H, path, G.full)
    assert U == to_mask([0, 1, 2, 5])
    assert is_dom_set(H, U, T)


def test_k3_example():
    G = make_named_graph("K3")
    H, path = four_subdivide(G)
    U = td_transform_up(G, H, path, to_mask([0, 1]))
    assert U.bit_count() == 8 and is_dom_set(H, U, T)
    assert gamma(H, T) == gamma(G, T) + 2 * G.m == 8


def test_down_on_every_td_set_of_p6():
    G = make_named_graph("K2")
    H, path = four_subdivide(G)
    for size in range(2, H.n + 1):
        for D in enumerate_dom_sets(H, T, size):
            back = td_transform_down(G, H, path, D)
            assert is_dom_set(G, back, T) and back.bit_count() <= D.bit_count() - 2


@pytest.mark.parametrize("name", ["K3", "P4", "C4", "K1,3", "paw"])
def test_round_trip(name):
    G = make_named_graph(name)
    H, path = four_subdivide(G)
    for size in range(2, G.n + 1):
        for D in enumerate_dom_sets(G, T, size):
            U = td_transform_up(G, H, path, D)
            assert U.bit_count() == D.bit_count() + 2 * G.m and is_dom_set(H, U, T)
            back = td_transform_down(G, H, path, U)
            assert back.bit_count() <= D.bit_count() and is_dom_set(G, back, T)


def test_rejects_non_td_sets():
    G = make_named_graph("P4")
    H, path = four_subdivide(G)
    with pytest.raises(InvalidInput):
        td_transform_up(G, H, path, to_mask([0]))
    with pytest.raises(InvalidInput):
        td_transform_down(G, H, path, to_mask([0, 1]))
