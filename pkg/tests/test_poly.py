import pytest

from ctdom.classes import is_h_free
from ctdom.domination import DomKind, gamma
from ctdom.errors import InvalidSpec, NotInClass
from ctdom.graph import build_graph, make_named_graph, random_connected_graph
from ctdom.poly import BoundFn, BoundKind, bound_value, two_ec_semitotal, two_ec_total_p6kp3
from ctdom.suites import brute_ct

T, S = DomKind.TOTAL, DomKind.SEMITOTAL


@pytest.mark.parametrize(
    "kind, param, value",
    [(BoundKind.TOTAL_P6KP3, 2, 93), (BoundKind.TOTAL_P6KP3, 0, 19), (BoundKind.SEMITOTAL_LIFT, 8, 64)],
)
def test_bounds(kind, param, value):
    assert bound_value(BoundFn(kind, param)) == value


def test_negative_bound():
    with pytest.raises(InvalidSpec):
        bound_value(BoundFn(BoundKind.TOTAL_P6KP3, -1))


def _graphs(accept, kind, want=12):
    out = []
    for seed in range(400):
        G = random_connected_graph(6 + seed % 4, 0.3, seed)
        if accept(G) and gamma(G, kind) >= 3:
            out.append(G)
        if len(out) == want:
            break
    return out


def test_p6_free_base_case():
    graphs = _graphs(lambda G: is_h_free(G, "P6"), T)
    assert graphs
    for G in graphs:
        trace = []
        assert two_ec_total_p6kp3(G, 0, trace=trace)
        assert brute_ct(G, T) <= 2
        assert trace == ["P6-free: ct <= 2"]


def test_recursion_drops_k():
    G = make_named_graph("C7")
    trace = []
    assert two_ec_total_p6kp3(G, 2, trace=trace)
    assert len(trace) <= 3


def test_k1_matches_oracle():
    graphs = _graphs(lambda G: not is_h_free(G, "P6") and is_h_free(G, "P6+P3"), T, want=8)
    assert graphs
    for G in graphs:
        assert two_ec_total_p6kp3(G, 1) == (brute_ct(G, T) <= 2)


def test_not_in_class():
    # P6 plus a disjoint P3 hanging off by a long path: contains induced P6+P3
    G = build_graph(12, [(i, i + 1) for i in range(11)])
    with pytest.raises(NotInClass):
        two_ec_total_p6kp3(G, 0)


@pytest.mark.parametrize("base", ["P8", "2P4"])
def test_semitotal_bases(base):
    graphs = _graphs(lambda G: is_h_free(G, base), S)
    assert graphs
    for G in graphs:
        assert two_ec_semitotal(G) is True
        assert brute_ct(G, S) <= 2


def test_semitotal_outside_classes():
    # a long path contains P8+3P3 and 2P4+3P3
    G = build_graph(40, [(i, i + 1) for i in range(39)])
    trace = []
    assert two_ec_semitotal(G, trace=trace) is None
    assert trace[-1] == "outside the supported classes"
