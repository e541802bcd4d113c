"""Class-restricted algorithms for 2-Edge Contraction.

The exact-search steps that are polynomial only for fixed parameters
(is there a dominating set of size at most f?) run on the branch and bound
solver under the caller's budget.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .classes import contains_induced, is_h_free
from .contraction import _prepare, ct_characterization
from .domination import DomKind, _meter, min_dom_set
from .errors import InvalidSpec, NotInClass
from .graph import Graph, make_named_graph


class BoundKind(enum.Enum):
    TOTAL_P6KP3 = "TotalP6kP3"
    SEMITOTAL_LIFT = "SemitotalLift"


@dataclass(frozen=True)
class BoundFn:
    kind: BoundKind
    param: int


def bound_value(b: BoundFn) -> int:
    """k^4 + 4k^2 + 21k + 19 for the total recursion, 8|V(H)| for the lift."""
    if b.param < 0:
        raise InvalidSpec("bound parameter must be non-negative")
    if b.kind is BoundKind.TOTAL_P6KP3:
        k = b.param
        return k**4 + 4 * k**2 + 21 * k + 19
    return 8 * b.param


def _plus_p3(base: str, t: int) -> str:
    return base if t == 0 else f"{base}+{t}P3"


def two_ec_total_p6kp3(G: Graph, k: int, budget=None, trace: list | None = None) -> bool:
    """Decide ct_gamma_t(G) <= 2 for a connected (P6+kP3)-free G with gamma_t >= 3.

    Follows the recursion: drop to k-1 when G is already (P6+(k-1)P3)-free
    (k = 0 answers yes), answer yes when gamma_t(G) > f(k), and otherwise
    decide through the characterisation.
    """
    if k < 0:
        raise InvalidSpec("k must be non-negative")
    meter = _meter(budget)
    _prepare(G, DomKind.TOTAL, meter)
    if contains_induced(G, _plus_p3("P6", k)) is not None:
        raise NotInClass(f"G contains an induced {_plus_p3('P6', k)}")
    steps = trace if trace is not None else []
    while True:
        if k == 0:
            steps.append("P6-free: ct <= 2")
            return True
        if is_h_free(G, _plus_p3("P6", k - 1)):
            steps.append(f"(P6+{k - 1}P3)-free: recurse with k={k - 1}")
            k -= 1
            continue
        f = bound_value(BoundFn(BoundKind.TOTAL_P6KP3, k))
        g = min_dom_set(G, DomKind.TOTAL, meter).bit_count()
        if g > f:
            steps.append(f"gamma_t={g} > f({k})={f}: yes")
            return True
        ans = ct_characterization(G, DomKind.TOTAL, meter).value <= 2
        steps.append(f"gamma_t={g} <= f({k})={f}: characterisation says {ans}")
        return ans


BASES = ("P8", "2P4")


def two_ec_semitotal(G: Graph, budget=None, trace: list | None = None) -> bool | None:
    """Decide ct_gamma_t2(G) <= 2 when G is (P8+tP3)- or (2P4+tP3)-free, t <= 3.

    Returns None when G lies in none of these classes.
    """
    meter = _meter(budget)
    _prepare(G, DomKind.SEMITOTAL, meter)
    steps = trace if trace is not None else []
    for t in range(0, 4):
        for base in BASES:
            if is_h_free(G, _plus_p3(base, t)):
                return _lift(G, base, t, meter, steps)
    steps.append("outside the supported classes")
    return None


def _lift(G: Graph, base: str, t: int, meter, steps: list) -> bool:
    while True:
        if t == 0:
            steps.append(f"{base}-free: ct <= 2")
            return True
        smaller = _plus_p3(base, t - 1)
        if is_h_free(G, smaller):
            steps.append(f"{smaller}-free: delegate")
            t -= 1
            continue
        f = bound_value(BoundFn(BoundKind.SEMITOTAL_LIFT, make_named_graph(smaller).n))
        g = min_dom_set(G, DomKind.SEMITOTAL, meter).bit_count()
        if g > f:
            steps.append(f"gamma_t2={g} > 8|V({smaller})|={f}: yes")
            return True
        ans = ct_characterization(G, DomKind.SEMITOTAL, meter).value <= 2
        steps.append(f"gamma_t2={g} <= {f}: characterisation says {ans}")
        return ans
