import random

import pytest

from ctdom.detectors import (
    Pattern,
    STConfig,
    contains_edge,
    find_friendly_triple,
    find_pattern,
    find_st_config,
    validate_witness,
)
from ctdom.graph import build_graph, make_named_graph, random_connected_graph, to_mask
from ctdom.oracles import all_distances, adjacency, naive_find, naive_friendly


def test_p3_in_triangle():
    K3 = make_named_graph("K3")
    assert find_pattern(K3, K3.full, Pattern.P3) is not None


def test_independent_set_has_nothing():
    C6 = make_named_graph("C6")
    D = to_mask([0, 2, 4])
    for p in Pattern:
        assert find_pattern(C6, D, p) is None
    assert find_friendly_triple(C6, D) is None
    assert find_st_config(C6, D) is None
    assert not contains_edge(C6, D)


def test_claw():
    claw = make_named_graph("K1,3")
    assert find_pattern(claw, claw.full, Pattern.K13) == (0, 1, 2, 3)
    assert find_pattern(claw, claw.full, Pattern.P4) is None
    cfg, w = find_st_config(claw, claw.full, STConfig.O5)
    assert cfg is STConfig.O5 and w[0] == 0


def test_friendly_triple():
    P4 = make_named_graph("P4")
    assert find_friendly_triple(P4, to_mask([0, 1, 3])) is not None
    # edge 23 with d(3,0) = 3 but d(2,0) = 2: found only under endpoint symmetry
    D = to_mask([0, 2, 3])
    assert find_friendly_triple(P4, D) is not None
    assert find_friendly_triple(P4, D, symmetric=False) is None
    assert find_friendly_triple(P4, to_mask([0, 1])) is None


def test_o4_in_p5():
    P5 = make_named_graph("P5")
    cfg, w = find_st_config(P5, to_mask([0, 1, 2, 4]), STConfig.O4)
    assert w == (0, 1, 2, 4)


def test_o3_with_identified_vertex():
    # a1 a2 m1 c m2 b2 b1 = 0..6
    G = build_graph(7, [(0, 1), (1, 2), (2, 3), (4, 3), (5, 4), (6, 5)])
    D = to_mask([0, 1, 3, 5, 6])
    cfg, w = find_st_config(G, D, STConfig.O3)
    assert w[2] == w[5] == 3
    assert validate_witness(G, D, STConfig.O3, w)


def test_witness_validation_rejects_garbage():
    P5 = make_named_graph("P5")
    D = P5.full
    assert not validate_witness(P5, D, Pattern.P3, (0, 2, 4))
    assert not validate_witness(P5, D, Pattern.P3, (0, 1))
    assert not validate_witness(P5, to_mask([0, 1]), Pattern.P3, (0, 1, 2))


@pytest.mark.parametrize("seed", range(40))
def test_against_naive(seed):
    rng = random.Random(seed)
    G = random_connected_graph(rng.randint(4, 10), rng.uniform(0.15, 0.6), seed)
    D = sum(1 << v for v in range(G.n) if rng.random() < 0.6)
    S = {v for v in range(G.n) if D >> v & 1}
    dist = all_distances(adjacency(G))
    for p in Pattern:
        assert find_pattern(G, D, p) == naive_find(G, S, p.value, dist)
    for cfg in STConfig:
        got = find_st_config(G, D, cfg)
        assert (got[1] if got else None) == naive_find(G, S, f"O{cfg.value}", dist)
    assert (find_friendly_triple(G, D) is not None) == naive_friendly(G, S, dist)


@pytest.mark.parametrize("seed", range(20))
def test_witnesses_revalidate_and_containment(seed):
    rng = random.Random(100 + seed)
    G = random_connected_graph(9, 0.3, seed)
    D = sum(1 << v for v in range(G.n) if rng.random() < 0.7)
    for p in Pattern:
        w = find_pattern(G, D, p)
        if w is not None:
            assert validate_witness(G, D, p, w)
            assert find_pattern(G, D, p) == w
    if find_pattern(G, D, Pattern.TWO_P3) is not None:
        assert find_pattern(G, D, Pattern.P3) is not None
    found = find_st_config(G, D)
    if found:
        assert validate_witness(G, D, *found)
