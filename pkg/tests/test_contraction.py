import pytest

from ctdom.contraction import (
    ct_bruteforce,
    ct_characterization,
    k_edge_contraction,
    minimal_or_o6,
    semitotal_lemma_witness,
    total_lemma_witness,
    verify_certificate,
)
from ctdom.domination import DomKind
from ctdom.errors import InvalidInput, IsolatedVertex, Undefined
from ctdom.graph import build_graph, make_named_graph, random_connected_graph
from ctdom.suites import load_fixtures

T, S = DomKind.TOTAL, DomKind.SEMITOTAL


@pytest.mark.parametrize("kind", [T, S])
def test_c6(kind):
    C6 = make_named_graph("C6")
    brute = ct_bruteforce(C6, kind)
    char = ct_characterization(C6, kind)
    assert brute.value == char.value == 1
    assert verify_certificate(C6, kind, brute) and verify_certificate(C6, kind, char)


@pytest.mark.parametrize("name", ["K1,4", "P4"])
def test_gamma_two_is_undefined(name):
    with pytest.raises(Undefined):
        ct_characterization(make_named_graph(name), T)
    with pytest.raises(Undefined):
        ct_bruteforce(make_named_graph(name), T)


def test_preconditions():
    with pytest.raises(IsolatedVertex):
        ct_characterization(build_graph(4, [(0, 1), (1, 2)]), T)
    with pytest.raises(InvalidInput):
        ct_characterization(make_named_graph("2P3"), T)


def test_k_edge_contraction():
    C6 = make_named_graph("C6")
    assert k_edge_contraction(C6, T, 1)
    assert not k_edge_contraction(C6, T, 0)
    for kind in (T, S):
        assert k_edge_contraction(make_named_graph("P8"), kind, 3)


@pytest.mark.parametrize("fixture", load_fixtures(), ids=lambda f: f"{f['kind']}-ct{f['ct']}")
def test_fixtures(fixture):
    G = build_graph(fixture["n"], fixture["edges"])
    kind = DomKind.parse(fixture["kind"])
    brute = ct_bruteforce(G, kind)
    char = ct_characterization(G, kind)
    assert brute.value == char.value == fixture["ct"]
    assert brute.gamma == char.gamma == fixture["gamma"]
    assert verify_certificate(G, kind, char)


def test_fixtures_cover_every_value():
    seen = {(f["kind"], f["ct"]) for f in load_fixtures()}
    assert seen == {(k, c) for k in ("total", "semitotal") for c in (1, 2, 3)}


@pytest.mark.parametrize("seed", range(30))
def test_cross_validation(seed):
    G = random_connected_graph(5 + seed % 4, 0.3, seed)
    for kind in (T, S):
        try:
            brute = ct_bruteforce(G, kind)
        except Undefined:
            continue
        char = ct_characterization(G, kind)
        assert brute.value == char.value in (1, 2, 3)
        assert verify_certificate(G, kind, char)


@pytest.mark.parametrize("seed", range(20))
def test_lemmas_imply_small_ct(seed):
    G = random_connected_graph(6 + seed % 3, 0.3, 50 + seed)
    try:
        if total_lemma_witness(G) is not None:
            assert ct_characterization(G, T).value <= 2
    except Undefined:
        pass
    try:
        if semitotal_lemma_witness(G) is not None:
            assert ct_characterization(G, S).value <= 2
    except Undefined:
        pass


def test_minimal_or_o6_never_fails():
    for seed in range(15):
        G = random_connected_graph(8, 0.25, 200 + seed)
        try:
            applicable, holds, _ = minimal_or_o6(G)
        except Undefined:
            continue
        assert holds or not applicable
