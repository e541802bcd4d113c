import itertools
import random

import pytest

from ctdom.classes import (
    Verdict,
    classify_dichotomy,
    contains_induced,
    find_hole,
    is_h_free,
    is_hole_free,
    is_induced_subgraph_of,
)
from ctdom.domination import DomKind
from ctdom.errors import InvalidSpec
from ctdom.graph import make_named_graph, random_connected_graph
from ctdom.oracles import naive_contains_induced
from ctdom.suites import DICHOTOMY_TABLE

T, S = DomKind.TOTAL, DomKind.SEMITOTAL


def test_induced_examples():
    assert contains_induced(make_named_graph("C5"), "K1,3") is None
    assert contains_induced(make_named_graph("P6"), "P5") == [0, 1, 2, 3, 4]
    paw = make_named_graph("paw")
    emb = contains_induced(paw, "P3")
    assert sorted(paw.label(v) for v in emb) == ["P(1)", "P(3)", "P(4)"]


def test_induced_not_subgraph():
    # K3 contains P3 as a subgraph but not as an induced one
    assert is_h_free(make_named_graph("K3"), "P3")
    assert not is_h_free(make_named_graph("C4"), "P3")


@pytest.mark.parametrize("seed", range(30))
def test_induced_against_naive(seed):
    rng = random.Random(seed)
    G = random_connected_graph(rng.randint(4, 9), rng.uniform(0.2, 0.7), seed)
    for H in ("P3", "P4", "K1,3", "C4", "paw", "2P2", "K3", "P2+K1"):
        assert (contains_induced(G, H) is not None) == naive_contains_induced(G, make_named_graph(H))


def test_embedding_is_induced():
    G = random_connected_graph(10, 0.4, 7)
    H = make_named_graph("P4")
    emb = contains_induced(G, H)
    assert emb is not None
    for a, b in itertools.combinations(range(H.n), 2):
        assert G.has_edge(emb[a], emb[b]) == H.has_edge(a, b)


@pytest.mark.parametrize(
    "pattern, kind, verdict",
    [("P6", T, Verdict.HARD), ("P4+2P3", T, Verdict.POLYNOMIAL), ("K1,3", S, Verdict.HARD)],
)
def test_dichotomy_examples(pattern, kind, verdict):
    assert classify_dichotomy(pattern, kind, 2).verdict is verdict


@pytest.mark.parametrize("row", DICHOTOMY_TABLE, ids=lambda r: r[0])
def test_dichotomy_table(row):
    pattern, total, semi = row
    for k in (1, 2):
        assert classify_dichotomy(pattern, T, k).verdict is (Verdict.POLYNOMIAL if total == "P" else Verdict.HARD)
        assert classify_dichotomy(pattern, S, k).verdict is (Verdict.POLYNOMIAL if semi == "P" else Verdict.HARD)


def test_dichotomy_monotone():
    names = [r[0] for r in DICHOTOMY_TABLE]
    for kind in (T, S):
        for a, b in itertools.permutations(names, 2):
            if is_induced_subgraph_of(a, b) and classify_dichotomy(a, kind).verdict is Verdict.HARD:
                assert classify_dichotomy(b, kind).verdict is Verdict.HARD, (a, b)


def test_dichotomy_rejects_k():
    with pytest.raises(InvalidSpec):
        classify_dichotomy("P3", T, 3)


def test_holes():
    assert find_hole(make_named_graph("C5"), 5, 5) is not None
    assert is_hole_free(make_named_graph("C5"), 4, 4)
    assert is_hole_free(make_named_graph("K5"), 4)
    assert find_hole(make_named_graph("C4"), 3, 3) is None
    assert find_hole(make_named_graph("K3"), 3, 3) is not None
    with pytest.raises(InvalidSpec):
        find_hole(make_named_graph("C4"), 2)
