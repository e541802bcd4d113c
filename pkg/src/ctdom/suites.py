"""Seeded verification suites, one per acceptance criterion.

Each suite returns a SuiteResult.  A failure record always carries the
offending graph as an edge list together with the disagreeing values, so
a red run can be replayed from the report alone.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable

from . import oracles
from .classes import classify_dichotomy, contains_induced, is_h_free
from .contraction import (
    ct_bruteforce,
    ct_characterization,
    minimal_or_o6,
    semitotal_lemma_witness,
    total_lemma_witness,
)
from .detectors import Pattern, STConfig, find_friendly_triple, find_pattern, find_st_config, validate_witness
from .domination import DomKind, SolverBudget, enumerate_dom_sets, gamma, is_dom_set
from .errors import CtdomError, Timeout
from .graph import Graph, bits, build_graph, four_subdivide, random_connected_graph
from .poly import two_ec_semitotal, two_ec_total_p6kp3
from .reductions.formula import (
    Flavor,
    Formula,
    all_satisfying,
    random_3sat,
    random_nae,
    random_one_in_three,
    sat_bruteforce,
)
from .reductions.gadgets import GadgetKind, build_gadget, check_claimed_class, side_claims
from .reductions.local import check_local_claims
from .reductions.subdivision import td_transform_down, td_transform_up

TOTAL, SEMITOTAL = DomKind.TOTAL, DomKind.SEMITOTAL


@dataclass
class SuiteResult:
    criterion: int
    name: str
    passed: bool
    checked: int
    summary: str
    stats: dict = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    timeouts: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.criterion} ({self.name}): {self.summary}"

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "summary": self.summary,
            "stats": self.stats,
            "failures": self.failures[:20],
            "failureCount": len(self.failures),
            "timeouts": self.timeouts[:20],
            "timeoutCount": len(self.timeouts),
            "seconds": round(self.seconds, 3),
        }


def _edges(G: Graph) -> list[list[int]]:
    return [list(e) for e in G.edges()]


def _failure(G: Graph, **values) -> dict:
    return {"n": G.n, "edges": _edges(G), **values}


# corpora


def _rng(seed: int, tag: str) -> random.Random:
    return random.Random(f"{seed}:{tag}")


def random_graph(rng: random.Random, n: int) -> Graph:
    """One connected graph on n vertices from a mix of sparse and denser models."""
    style = rng.choice(("gnp", "tree", "tree+"))
    if style == "gnp":
        return random_connected_graph(n, rng.uniform(0.2, 0.5), rng.randrange(2**31))
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    if style == "tree+":
        for _ in range(rng.randint(1, 2)):
            u, v = sorted(rng.sample(range(n), 2))
            edges.add((u, v))
    return build_graph(n, sorted(edges))


def corpus(
    rng: random.Random,
    count: int,
    n_range: tuple[int, int],
    kind: DomKind,
    min_gamma: int = 3,
    accept: Callable[[Graph], bool] | None = None,
    max_edges: int | None = None,
    max_tries: int = 200_000,
) -> list[Graph]:
    """``count`` distinct connected graphs with gamma >= min_gamma passing ``accept``."""
    seen = set()
    out: list[Graph] = []
    for _ in range(max_tries):
        if len(out) == count:
            break
        G = random_graph(rng, rng.randint(*n_range))
        key = (G.n, tuple(G.edges()))
        if key in seen or (max_edges is not None and G.m > max_edges):
            continue
        seen.add(key)
        if accept is not None and not accept(G):
            continue
        if gamma(G, kind) < min_gamma:
            continue
        out.append(G)
    return out


_CT_CACHE: dict = {}


def brute_ct(G: Graph, kind: DomKind, budget=None) -> int:
    key = (G.n, tuple(G.edges()), kind)
    if key not in _CT_CACHE:
        _CT_CACHE[key] = ct_bruteforce(G, kind, budget).value
    return _CT_CACHE[key]


def load_fixtures() -> list[dict]:
    text = resources.files("ctdom").joinpath("data/ct_fixtures.json").read_text()
    return json.loads(text)


def _tally(values) -> dict:
    out: dict = {}
    for v in values:
        out[str(v)] = out.get(str(v), 0) + 1
    return dict(sorted(out.items()))


# 1, 2: characterisation against brute force


def _char_suite(criterion: int, kind: DomKind, seed: int, count: int) -> SuiteResult:
    graphs = corpus(_rng(seed, f"char-{kind.value}"), count, (4, 9), kind)
    failures = []
    values = []
    for G in graphs:
        b = brute_ct(G, kind)
        c = ct_characterization(G, kind).value
        values.append(b)
        if b != c or b not in (1, 2, 3):
            failures.append(_failure(G, brute=b, characterization=c))
    fixtures = [fx for fx in load_fixtures() if fx["kind"] == kind.value.lower()]
    fixture_ct = {}
    for fx in fixtures:
        G = build_graph(fx["n"], fx["edges"])
        b, c = brute_ct(G, kind), ct_characterization(G, kind).value
        fixture_ct[fx["ct"]] = (b, c)
        if b != fx["ct"] or c != fx["ct"]:
            failures.append(_failure(G, frozen=fx["ct"], brute=b, characterization=c))
    missing = [k for k in (1, 2, 3) if k not in fixture_ct]
    enough = len(graphs) >= count and not missing
    stats = {"graphs": len(graphs), "ctDistribution": _tally(values), "fixtures": sorted(fixture_ct)}
    summary = (
        f"{len(graphs)} graphs, ct distribution {stats['ctDistribution']}, "
        f"fixtures ct={sorted(fixture_ct)}, {len(failures)} disagreements"
    )
    return SuiteResult(criterion, f"characterisation {kind.value.lower()}", enough and not failures, len(graphs), summary, stats, failures)


def suite_char_total(seed: int = 0, scale: float = 1.0) -> SuiteResult:
    return _char_suite(1, TOTAL, seed, max(300, int(300 * scale)))


def suite_char_semitotal(seed: int = 0, scale: float = 1.0) -> SuiteResult:
    return _char_suite(2, SEMITOTAL, seed, max(300, int(300 * scale)))


# 3: sufficient conditions for ct <= 2


def suite_lemmas(seed: int = 0, scale: float = 1.0) -> SuiteResult:
    count = max(300, int(300 * scale))
    failures = []
    fired = {"total": 0, "semitotal": 0, "minimalOrO6Applicable": 0}
    checked = 0
    for kind in (TOTAL, SEMITOTAL):
        graphs = corpus(_rng(seed, f"char-{kind.value}"), count, (4, 9), kind)
        for G in graphs:
            checked += 1
            hit = total_lemma_witness(G) if kind is TOTAL else semitotal_lemma_witness(G)
            if hit is not None:
                fired[kind.value.lower()] += 1
                ct = brute_ct(G, kind)
                if ct > 2:
                    failures.append(_failure(G, kind=kind.value, witnessSet=sorted(bits(hit[0])), ct=ct))
    # the minimal-or-O6 statement only applies to graphs whose minimum SD
    # sets are all independent with unique witnesses; those need more vertices
    rng = _rng(seed, "minimal-or-o6")
    for _ in range(20_000):
        if fired["minimalOrO6Applicable"] >= 10:
            break
        G = random_graph(rng, rng.randint(8, 12))
        if gamma(G, SEMITOTAL) < 3:
            continue
        applicable, holds, bad = minimal_or_o6(G)
        fired["minimalOrO6Applicable"] += applicable
        if not holds:
            failures.append(_failure(G, statement="minimal-or-O6", set=sorted(bits(bad))))
    summary = f"{checked} graphs, predicate fired {fired}, {len(failures)} violations"
    ok = not failures and fired["total"] > 0 and fired["semitotal"] > 0 and fired["minimalOrO6Applicable"] > 0
    return SuiteResult(3, "ct<=2 sufficient conditions", ok, checked, summary, fired, failures)


# 4: subdivision


def _sample_td_sets(H: Graph, rng: random.Random, seeds: list[int], extra: int) -> list[int]:
    """Given TD sets plus random supersets and greedy shrinkings of them."""
    out = list(seeds)
    for _ in range(extra):
        D = rng.choice(seeds)
        D |= sum(1 << v for v in range(H.n) if rng.random() < 0.15)
        order = list(bits(D))
        rng.shuffle(order)
        for v in order:
            if rng.random() < 0.5 and is_dom_set(H, D & ~(1 << v), TOTAL):
                D &= ~(1 << v)
        out.append(D)
    return out


def suite_subdivision(seed: int = 0, scale: float = 1.0, budget: SolverBudget | None = None) -> SuiteResult:
    count = max(50, int(50 * scale))
    rng = _rng(seed, "subdivision")
    budget = budget or SolverBudget(max_nodes=5_000_000, max_seconds=20.0)
    graphs = corpus(rng, count, (4, 6), TOTAL, max_edges=8)
    failures, timeouts = [], []
    contract_checks = finished = 0
    for G in graphs:
        H, path = four_subdivide(G)
        up_sets = []
        all_td = (D for size in range(2, G.n + 1) for D in enumerate_dom_sets(G, TOTAL, size))
        for D in all_td:
            try:
                U = td_transform_up(G, H, path, D)
            except CtdomError as exc:
                failures.append(_failure(G, step="up", D=sorted(bits(D)), error=str(exc)))
                continue
            contract_checks += 1
            if not is_dom_set(H, U, TOTAL) or U.bit_count() != D.bit_count() + 2 * G.m:
                failures.append(_failure(G, step="up", D=sorted(bits(D)), size=U.bit_count()))
            up_sets.append((D, U))
        for D, U in up_sets:
            back = td_transform_down(G, H, path, U)
            if back.bit_count() > D.bit_count():
                failures.append(_failure(G, step="round trip", D=sorted(bits(D)), back=sorted(bits(back))))
        for D in _sample_td_sets(H, rng, [U for _, U in up_sets], 20):
            try:
                td_transform_down(G, H, path, D)
                contract_checks += 1
            except CtdomError as exc:
                failures.append(_failure(G, step="down", D=sorted(bits(D)), error=str(exc)))
        try:
            gG, gH = gamma(G, TOTAL), gamma(H, TOTAL, budget)
            cG, cH = brute_ct(G, TOTAL), ct_characterization(H, TOTAL, budget).value
        except Timeout as exc:
            timeouts.append(_failure(G, error=str(exc)))
            continue
        finished += 1
        if gH != gG + 2 * G.m or cH != cG:
            failures.append(_failure(G, gammaG=gG, gammaH=gH, ctG=cG, ctH=cH))
    summary = (
        f"{len(graphs)} graphs, {contract_checks} transform contracts, "
        f"{finished} exact H checks finished, {len(timeouts)} timeouts, {len(failures)} violations"
    )
    ok = len(graphs) >= count and not failures and finished > 0
    stats = {"graphs": len(graphs), "contracts": contract_checks, "finished": finished}
    return SuiteResult(4, "4-subdivision", ok, len(graphs), summary, stats, failures, timeouts)


# 5: small gadgets


def _small_formulas(rng: random.Random, flavor: Flavor, count: int) -> list[Formula]:
    out, seen = [], set()
    while len(out) < count:
        X, C = rng.randint(3, 4), rng.randint(1, 4)
        f = random_3sat(X, C, rng) if flavor is Flavor.STANDARD_3SAT else random_nae(X, C, rng)
        key = (f.n_vars, f.clauses)
        # an unused variable leaves its gadget as a separate component
        used = {abs(l) for c in f.clauses for l in c}
        if key not in seen and len(used) == f.n_vars:
            seen.add(key)
            out.append(f)
    return out


def unsat_3sat_formulas() -> list[Formula]:
    """Unsatisfiable 3-SAT instances: all eight sign patterns on three variables, plus a padded copy."""
    full = tuple(tuple(s * v for s, v in zip(signs, (1, 2, 3))) for signs in itertools.product((1, -1), repeat=3))
    return [
        Formula(3, full, Flavor.STANDARD_3SAT),
        Formula(4, full + ((1, -2, 4), (-1, 3, -4)), Flavor.STANDARD_3SAT),
    ]


def fano_nae() -> Formula:
    """The Fano plane as a positive NAE instance; it has no 2-colouring."""
    lines = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))
    return Formula(7, lines, Flavor.NAE_POSITIVE)


def suite_small_gadgets(seed: int = 0, scale: float = 1.0) -> SuiteResult:
    count = max(100, int(100 * scale))
    rng = _rng(seed, "small-gadgets")
    failures = []
    stats = {}
    checked = 0
    plan = [
        (GadgetKind.TD_2P4, Flavor.STANDARD_3SAT, True),
        (GadgetKind.STD_LONG_PAW, Flavor.STANDARD_3SAT, True),
        (GadgetKind.STD_C3C4, Flavor.NAE_POSITIVE, False),
    ]
    for kind, flavor, with_ct in plan:
        sampled = _small_formulas(rng, flavor, count)
        extra = unsat_3sat_formulas() if flavor is Flavor.STANDARD_3SAT else [fano_nae()]
        sat_count = unsat_count = 0
        for f in sampled + extra:
            sat = sat_bruteforce(f) is not None
            sat_count += sat
            unsat_count += not sat
            out = build_gadget(kind, f)
            for B in out if isinstance(out, tuple) else (out,):
                checked += 1
                G = B.graph
                target = 2 * f.n_vars
                g = gamma(G, B.dom_kind)
                values = {"formula": f.to_text(), "sat": sat, "gamma": g, "target": target}
                bad = (g == target) != sat
                if with_ct:
                    c = ct_characterization(G, B.dom_kind).value
                    values["ct"] = c
                    bad |= (c == 2) != sat
                if bad:
                    failures.append(_failure(G, kind=kind.value, variant=B.variant, **values))
        stats[kind.value] = {"formulas": len(sampled) + len(extra), "sat": sat_count, "unsat": unsat_count}
    summary = f"{checked} gadget graphs {stats}, {len(failures)} biconditional failures"
    return SuiteResult(5, "small-gadget biconditionals", not failures, checked, summary, stats, failures)


# 6, 7: large gadgets


LARGE = (
    GadgetKind.TD_CLAW_K2,
    GadgetKind.TD_CLAW_K3,
    GadgetKind.STD_CLAW_K2,
    GadgetKind.STD_CLAW_K3,
    GadgetKind.STD_3P4_K3,
)


def smallest_one_in_three() -> Formula:
    return Formula(3, ((1, 2, 3),) * 3, Flavor.ONE_IN_THREE)


def _six_variable_instances(rng: random.Random, want: int) -> list[Formula]:
    out = []
    for _ in range(1000):
        f = random_one_in_three(6, rng)
        if sat_bruteforce(f) is not None:
            out.append(f)
        if len(out) == want:
            break
    return out


def suite_large_gadgets(seed: int = 0, scale: float = 1.0) -> SuiteResult:
    f3 = smallest_one_in_three()
    jobs = [(kind, f3) for kind in LARGE]
    # six variables only fits the capacity for the 3P4 gadget
    jobs += [(GadgetKind.STD_3P4_K3, f) for f in _six_variable_instances(_rng(seed, "large"), 2)]
    failures = []
    stats = {}
    checked = 0
    for kind, f in jobs:
        B = build_gadget(kind, f)
        G = B.graph
        row = stats.setdefault(f"{kind.value} |X|={f.n_vars}", {"n": G.n, "m": G.m, "assignments": 0})
        if G.n != B.predicted.vertex_count:
            failures.append({"kind": kind.value, "vertices": G.n, "predicted": B.predicted.vertex_count})
        holds, how = check_claimed_class(B)
        row["class"] = f"{B.predicted.claimed_class}: {how}" if holds else f"violated: {how}"
        if not holds:
            failures.append({"kind": kind.value, "class": B.predicted.claimed_class, "counterexample": how})
        for a in all_satisfying(f):
            checked += 1
            row["assignments"] += 1
            bad = [c.to_json() for c in side_claims(B, a) if not c.holds]
            if bad:
                failures.append({"kind": kind.value, "assignment": list(a), "claims": bad})
    summary = f"{len(jobs)} gadgets, {checked} certificates, {len(failures)} failed checks"
    return SuiteResult(6, "large-gadget certificates", not failures, checked, summary, stats, failures)


def suite_local_claims(seed: int = 0, scale: float = 1.0) -> SuiteResult:
    rng = _rng(seed, "local")
    bundles = [build_gadget(k, smallest_one_in_three()) for k in (GadgetKind.TD_CLAW_K3, GadgetKind.STD_CLAW_K3, GadgetKind.STD_3P4_K3)]
    for _ in range(max(3, int(3 * scale))):
        bundles.append(build_gadget(GadgetKind.STD_LONG_PAW, random_3sat(4, 4, rng)))
        bundles.extend(build_gadget(GadgetKind.STD_C3C4, random_nae(4, 4, rng)))
    failures = []
    per_kind: dict = {}
    checked = 0
    for B in bundles:
        for r in check_local_claims(B):
            checked += 1
            name = B.kind.value + (f" {B.variant}" if B.variant else "")
            per_kind[name] = per_kind.get(name, 0) + 1
            if not r.holds:
                failures.append({"kind": name, **r.to_json(B.graph)})
    summary = f"{checked} local claims {per_kind}, {len(failures)} violated"
    return SuiteResult(7, "local lower bounds", not failures and checked > 0, checked, summary, per_kind, failures)


# 8: polynomial-time solvers


def suite_poly(seed: int = 0, scale: float = 1.0) -> SuiteResult:
    rng = _rng(seed, "poly")
    k = lambda base: max(base, int(base * scale))  # noqa: E731
    failures = []
    stats = {}
    p6 = corpus(rng, k(100), (5, 10), TOTAL, accept=lambda G: is_h_free(G, "P6"))
    for G in p6:
        ans, ct = two_ec_total_p6kp3(G, 0), brute_ct(G, TOTAL)
        if not ans or ct > 2:
            failures.append(_failure(G, family="P6-free", solver=ans, ct=ct))
    stats["P6-free"] = len(p6)
    for base in ("P8", "2P4"):
        graphs = corpus(rng, k(100), (5, 10), SEMITOTAL, accept=lambda G, b=base: is_h_free(G, b))
        for G in graphs:
            ans, ct = two_ec_semitotal(G), brute_ct(G, SEMITOTAL)
            if ans is not True or ct > 2:
                failures.append(_failure(G, family=f"{base}-free", solver=ans, ct=ct))
        stats[f"{base}-free"] = len(graphs)
    mixed = corpus(
        rng,
        k(50),
        (6, 10),
        TOTAL,
        accept=lambda G: contains_induced(G, "P6") is not None and is_h_free(G, "P6+P3"),
    )
    answers = []
    for G in mixed:
        ans, ct = two_ec_total_p6kp3(G, 1), brute_ct(G, TOTAL)
        answers.append(ans)
        if ans != (ct <= 2):
            failures.append(_failure(G, family="(P6+P3)-free", solver=ans, ct=ct))
    stats["(P6+P3)-free with P6"] = len(mixed)
    stats["k=1 answers"] = _tally(answers)
    enough = stats["P6-free"] >= k(100) and stats["P8-free"] >= k(100) and stats["2P4-free"] >= k(100)
    enough = enough and len(mixed) >= k(50)
    checked = sum(v for v in stats.values() if isinstance(v, int))
    summary = f"{stats}, {len(failures)} disagreements"
    return SuiteResult(8, "polynomial-time solvers", enough and not failures, checked, summary, stats, failures)


# 9: dichotomy


# (pattern, verdict for gamma_t, verdict for gamma_t2), P = polynomial, H = hard;
# worked out by hand from the two membership conditions
DICHOTOMY_TABLE = [
    ("K1", "P", "P"),
    ("P2", "P", "P"),
    ("P3", "P", "P"),
    ("P4", "P", "P"),
    ("P5", "P", "P"),
    ("P6", "H", "H"),
    ("P7", "H", "H"),
    ("P8", "H", "H"),
    ("K1,3", "H", "H"),
    ("C3", "H", "H"),
    ("C4", "H", "H"),
    ("C5", "H", "H"),
    ("C6", "H", "H"),
    ("K4", "H", "H"),
    ("paw", "H", "H"),
    ("longpaw", "H", "H"),
    ("2P3", "P", "H"),
    ("3P3", "P", "H"),
    ("P4+P2", "P", "H"),
    ("P4+P3", "P", "H"),
    ("P4+2P3", "P", "H"),
    ("P5+P2", "H", "H"),
    ("P5+2K1", "P", "P"),
    ("P5+3K1", "P", "P"),
    ("P3+3P2", "P", "P"),
    ("P3+K1", "P", "P"),
    ("2P2", "P", "P"),
    ("3P2", "P", "P"),
    ("P2+3K1", "P", "P"),
    ("P4+K1", "P", "P"),
    ("2P4", "H", "H"),
    ("P6+K1", "H", "H"),
    ("K1,3+K1", "H", "H"),
    ("C3+K1", "H", "H"),
]


def suite_dichotomy(seed: int = 0, scale: float = 1.0) -> SuiteResult:
    failures = []
    checked = 0
    for spec, tot, semi in DICHOTOMY_TABLE:
        for kind, want in ((TOTAL, tot), (SEMITOTAL, semi)):
            for k in (1, 2):
                checked += 1
                got = classify_dichotomy(spec, kind, k)
                letter = "P" if got.verdict.value == "PolynomialTime" else "H"
                if letter != want:
                    failures.append({"pattern": spec, "kind": kind.value, "k": k, "expected": want, "got": got.to_json()})
    summary = f"{len(DICHOTOMY_TABLE)} patterns x 2 kinds x k in {{1,2}}, {len(failures)} mismatches"
    return SuiteResult(9, "dichotomy dispatcher", not failures, checked, summary, {"rows": len(DICHOTOMY_TABLE)}, failures)


# 10: detectors


_DETECTOR_KEYS = {
    "P3": Pattern.P3,
    "P4": Pattern.P4,
    "K13": Pattern.K13,
    "2P3": Pattern.TWO_P3,
    **{f"O{i}": STConfig(i) for i in range(1, 8)},
}


def _detect(G: Graph, D: int, name: str):
    key = _DETECTOR_KEYS[name]
    if isinstance(key, Pattern):
        return find_pattern(G, D, key)
    hit = find_st_config(G, D, key)
    return None if hit is None else hit[1]


def suite_detectors(seed: int = 0, scale: float = 1.0) -> SuiteResult:
    rng = _rng(seed, "detectors")
    count = max(200, int(200 * scale))
    failures = []
    hits = {name: 0 for name in _DETECTOR_KEYS}
    hits["friendly"] = 0
    for _ in range(count):
        n = rng.randint(3, 10)
        G = random_graph(rng, n)
        size = rng.randint(min(3, n), min(n, 8))
        D = sum(1 << v for v in rng.sample(range(n), size))
        Dset = set(bits(D))
        dist = oracles.all_distances(oracles.adjacency(G))
        for name in _DETECTOR_KEYS:
            fast = _detect(G, D, name)
            slow = oracles.naive_find(G, Dset, name, dist)
            hits[name] += fast is not None
            if fast != slow:
                failures.append(_failure(G, D=sorted(Dset), shape=name, detector=fast, naive=slow))
            elif fast is not None and not validate_witness(G, D, _DETECTOR_KEYS[name], fast):
                failures.append(_failure(G, D=sorted(Dset), shape=name, detector=fast, note="witness rejected"))
        ft = find_friendly_triple(G, D)
        slow = oracles.naive_friendly(G, Dset, dist)
        hits["friendly"] += ft is not None
        if (ft is not None) != slow or (ft is not None and not validate_witness(G, D, "friendly", ft)):
            failures.append(_failure(G, D=sorted(Dset), shape="friendly", detector=ft, naive=slow))
    summary = f"{count} (graph, D) pairs, 12 detectors, hits {hits}, {len(failures)} disagreements"
    return SuiteResult(10, "detector oracle equivalence", not failures, count, summary, hits, failures)


SUITES: dict[str, tuple[int, Callable[..., SuiteResult]]] = {
    "char-total": (1, suite_char_total),
    "char-semitotal": (2, suite_char_semitotal),
    "lemmas": (3, suite_lemmas),
    "subdivision": (4, suite_subdivision),
    "small-gadgets": (5, suite_small_gadgets),
    "large-gadgets": (6, suite_large_gadgets),
    "local-claims": (7, suite_local_claims),
    "poly": (8, suite_poly),
    "dichotomy": (9, suite_dichotomy),
    "detectors": (10, suite_detectors),
}


def suite_names() -> list[str]:
    return list(SUITES) + ["all"]


def run_suite(name: str | int, seed: int = 0, scale: float = 1.0) -> SuiteResult:
    if isinstance(name, int) or str(name).isdigit():
        by_number = {num: key for key, (num, _) in SUITES.items()}
        name = by_number[int(name)]
    _, fn = SUITES[name]
    start = time.monotonic()
    result = fn(seed=seed, scale=scale)
    result.seconds = time.monotonic() - start
    return result


def run_all(seed: int = 0, scale: float = 1.0) -> list[SuiteResult]:
    return [run_suite(name, seed, scale) for name in SUITES]
