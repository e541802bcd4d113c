"""Contraction numbers ct_gamma_t and ct_gamma_t2.

Two independent routes: exhaustive search over contraction sequences,
and the characterisation by witnesses inside (near-)minimum dominating
sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .detectors import (
    Pattern,
    STConfig,
    contains_edge,
    find_friendly_triple,
    find_pattern,
    find_st_config,
    validate_witness,
)
from .domination import (
    DomKind,
    Meter,
    SolverBudget,
    _meter,
    check_admissible,
    enumerate_dom_sets,
    is_dom_set,
    min_dom_set,
    witnesses,
)
from .errors import InvalidInput, TheoryViolation, Undefined
from .graph import Graph, bits, contract_edge

LEVEL2_PATTERNS = (Pattern.P4, Pattern.K13, Pattern.TWO_P3)


@dataclass
class CtCertificate:
    sequence: list[tuple[int, int]] = field(default_factory=list)
    final_set: int | None = None
    dom_set: int | None = None
    witness: tuple[str, tuple[int, ...]] | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {}
        if self.sequence or self.final_set is not None:
            out["sequence"] = [list(e) for e in self.sequence]
            out["final_set"] = list(bits(self.final_set or 0))
        if self.dom_set is not None:
            out["dom_set"] = list(bits(self.dom_set))
        if self.witness is not None:
            out["witness"] = {"shape": self.witness[0], "vertices": list(self.witness[1])}
        return out


@dataclass
class CtResult:
    value: int
    gamma: int
    certificate: CtCertificate | None = None
    diagnostics: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"ct": self.value, "gamma": self.gamma}
        if self.certificate:
            out["certificate"] = self.certificate.to_json()
        if self.diagnostics:
            out["diagnostics"] = self.diagnostics
        return out


def _prepare(G: Graph, kind: DomKind, meter: Meter) -> int:
    kind = DomKind.parse(kind)
    check_admissible(G, kind)
    if G.n < 3 or not G.is_connected():
        raise InvalidInput("contraction numbers need a connected graph on at least 3 vertices")
    g = min_dom_set(G, kind, meter).bit_count()
    if g == 2:
        raise Undefined("gamma is 2, so it cannot drop by one")
    return g


def ct_bruteforce(G: Graph, kind: DomKind, budget: SolverBudget | None = None) -> CtResult:
    """Least k <= 3 such that k contractions reach gamma(G) - 1 exactly.

    Graphs on each level are deduplicated by their labelled adjacency.
    ``diagnostics['drop_by_two']`` counts single contractions that lower
    gamma by two or more.
    """
    kind = DomKind.parse(kind)
    meter = _meter(budget)
    g = _prepare(G, kind, meter)
    target = g - 1
    level = {G.fingerprint(): (G, [])}
    drops = 0
    for k in (1, 2, 3):
        nxt: dict = {}
        hit = None
        for H, seq in level.values():
            for u, v in H.edges():
                C = contract_edge(H, u, v)
                fp = C.fingerprint()
                if fp in nxt:
                    continue
                nxt[fp] = (C, seq + [(u, v)])
                if C.n < 2:
                    continue
                D = min_dom_set(C, kind, meter)
                val = D.bit_count()
                if k == 1 and val <= g - 2:
                    drops += 1
                if val == target and hit is None:
                    hit = CtCertificate(sequence=seq + [(u, v)], final_set=D)
                    if k > 1:
                        break
            if hit is not None and k > 1:
                break
        # level 1 is scanned completely so the drop counter sees every contraction
        if hit is not None:
            return CtResult(k, g, hit, {"drop_by_two": drops})
        level = nxt
    raise TheoryViolation(f"no sequence of at most 3 contractions reaches gamma {target}")


def ct_characterization(G: Graph, kind: DomKind, budget: SolverBudget | None = None) -> CtResult:
    """ct from witnesses inside minimum and size gamma+1 dominating sets.

    Total: 1 iff some minimum TD set contains a P3; 2 iff otherwise some TD
    set of size gamma+1 contains a P4, K1,3 or 2P3; else 3.
    Semitotal: friendly triple at level 1, ST-configuration at level 2.
    """
    kind = DomKind.parse(kind)
    meter = _meter(budget)
    g = _prepare(G, kind, meter)
    for D in enumerate_dom_sets(G, kind, g, meter):
        if kind is DomKind.TOTAL:
            w = find_pattern(G, D, Pattern.P3)
            shape = Pattern.P3.value
        else:
            w = find_friendly_triple(G, D)
            shape = "friendly"
        if w is not None:
            return CtResult(1, g, CtCertificate(dom_set=D, witness=(shape, w)))
    for D in enumerate_dom_sets(G, kind, g + 1, meter):
        if kind is DomKind.TOTAL:
            for p in LEVEL2_PATTERNS:
                w = find_pattern(G, D, p)
                if w is not None:
                    return CtResult(2, g, CtCertificate(dom_set=D, witness=(p.value, w)))
        else:
            hit = find_st_config(G, D)
            if hit is not None:
                cfg, w = hit
                return CtResult(2, g, CtCertificate(dom_set=D, witness=(cfg.name, w)))
    return CtResult(3, g, None)


def ct(G: Graph, kind: DomKind, method: str = "char", budget=None) -> CtResult:
    if method == "brute":
        return ct_bruteforce(G, kind, budget)
    if method == "char":
        return ct_characterization(G, kind, budget)
    raise ValueError(f"unknown method {method!r}")


def k_edge_contraction(G: Graph, kind: DomKind, k: int, budget=None, method: str = "char") -> bool:
    """Is ct(G) <= k?  k = 0 is always false, k >= 3 always true once gamma >= 3."""
    if k <= 0:
        meter = _meter(budget)
        _prepare(G, DomKind.parse(kind), meter)
        return False
    if k >= 3:
        _prepare(G, DomKind.parse(kind), _meter(budget))
        return True
    return ct(G, kind, method, budget).value <= k


def verify_certificate(G: Graph, kind: DomKind, result: CtResult, budget=None) -> bool:
    """Replay a brute-force certificate or re-validate a characterisation witness."""
    kind = DomKind.parse(kind)
    cert = result.certificate
    if cert is None:
        return result.value == 3
    if cert.sequence:
        H = G
        for u, v in cert.sequence:
            H = contract_edge(H, u, v)
        if len(cert.sequence) != result.value:
            return False
        D = cert.final_set
        return is_dom_set(H, D, kind) and min_dom_set(H, kind, budget).bit_count() == D.bit_count() == result.gamma - 1
    D = cert.dom_set
    shape, w = cert.witness
    expected = result.gamma if result.value == 1 else result.gamma + 1
    if not is_dom_set(G, D, kind) or D.bit_count() != expected:
        return False
    key = shape if shape == "friendly" else (STConfig[shape] if shape.startswith("O") else Pattern(shape))
    return validate_witness(G, D, key, w)


# sufficient conditions for ct <= 2


def total_lemma_witness(G: Graph, budget=None):
    """A minimum TD set with x, y, z, xy an edge and d(z, {x, y}) <= 2, if any."""
    meter = _meter(budget)
    g = min_dom_set(G, DomKind.TOTAL, meter).bit_count()
    for D in enumerate_dom_sets(G, DomKind.TOTAL, g, meter):
        w = find_friendly_triple(G, D)
        if w is not None:
            return D, w
    return None


def semitotal_lemma_witness(G: Graph, budget=None):
    """A minimum SD set containing an edge or a vertex with two witnesses, if any."""
    meter = _meter(budget)
    g = min_dom_set(G, DomKind.SEMITOTAL, meter).bit_count()
    for D in enumerate_dom_sets(G, DomKind.SEMITOTAL, g, meter):
        if contains_edge(G, D):
            return D, "edge"
        for x in bits(D):
            if witnesses(G, D, x).bit_count() >= 2:
                return D, "double-witness"
    return None


def is_minimal(G: Graph, D: int, kind: DomKind) -> bool:
    return not any(is_dom_set(G, D & ~(1 << v), kind) for v in bits(D))


def minimal_or_o6(G: Graph, budget=None) -> tuple[bool, bool, int | None]:
    """Check the minimal-or-O6 statement on one graph.

    Returns (applicable, holds, counterexample).  The statement applies when
    ct_gamma_t2(G) <= 2 and every minimum SD set is edge-free with unique
    witnesses; it then says every SD set of size gamma+1 that contains an
    ST-configuration is minimal or contains an O6.
    """
    kind = DomKind.SEMITOTAL
    meter = _meter(budget)
    g = min_dom_set(G, kind, meter).bit_count()
    if g < 3:
        return False, True, None
    for D in enumerate_dom_sets(G, kind, g, meter):
        if contains_edge(G, D) or any(witnesses(G, D, x).bit_count() != 1 for x in bits(D)):
            return False, True, None
    if ct_characterization(G, kind, meter).value > 2:
        return False, True, None
    for D in enumerate_dom_sets(G, kind, g + 1, meter):
        if find_st_config(G, D) is None:
            continue
        if is_minimal(G, D, kind) or find_st_config(G, D, STConfig.O6) is not None:
            continue
        return True, False, D
    return True, True, None
