import pytest

from ctdom.domination import DomKind
from ctdom.graph import make_named_graph
from ctdom.reductions.gadgets import GadgetKind, build_gadget
from ctdom.reductions.local import LocalClaim, check_claim, check_local_claims, claims_for, local_minimum
from ctdom.reductions.formula import Flavor, Formula
from ctdom.suites import smallest_one_in_three


def test_local_minimum_on_closed_piece():
    # the whole of C6 is a closed piece: the minimum is gamma_t
    C6 = make_named_graph("C6")
    value, T = local_minimum(C6, DomKind.TOTAL, C6.full, C6.full)
    assert value == 4


def test_boundary_vertices_can_be_dominated_from_outside():
    # on P5, the piece {0, 1} sees vertex 1 as a boundary vertex, only 0 must be dominated
    P5 = make_named_graph("P5")
    value, _ = local_minimum(P5, DomKind.TOTAL, 0b11, 0b11)
    assert value == 1


def test_absent_claim():
    P3 = make_named_graph("P3")
    claim = LocalClaim("centre in D", ("0", "1", "2"), absent=("1",))
    assert check_claim(P3, DomKind.TOTAL, claim).holds
    claim = LocalClaim("end in D", ("0", "1", "2"), absent=("0",))
    assert not check_claim(P3, DomKind.TOTAL, claim).holds


@pytest.mark.parametrize(
    "kind, f",
    [
        (GadgetKind.TD_CLAW_K3, smallest_one_in_three()),
        (GadgetKind.STD_CLAW_K3, smallest_one_in_three()),
        (GadgetKind.STD_3P4_K3, smallest_one_in_three()),
        (GadgetKind.STD_LONG_PAW, Formula(3, ((1, 2, 3), (-1, 2, -3)), Flavor.STANDARD_3SAT)),
        (GadgetKind.STD_C3C4, Formula(4, ((1, 2, 3), (2, 3, 4)), Flavor.NAE_POSITIVE)),
    ],
    ids=lambda x: getattr(x, "value", ""),
)
def test_claims_hold(kind, f):
    built = build_gadget(kind, f)
    for B in built if isinstance(built, tuple) else (built,):
        assert claims_for(B)
        for r in check_local_claims(B):
            assert r.holds, r.to_json(B.graph)
