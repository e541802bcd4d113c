"""Hardness gadgets: constructors, predicted invariants and certificates.

Every builder returns a labelled graph whose vertex names follow the
figures (``T_x1``, ``p_x1^c2``, ``v_{c1,1}^x2`` ...).  Which figure or
sentence each edge group comes from is tabulated in WIRING.md.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Callable

from ..classes import contains_induced, find_hole, kp4_free_by_cliques
from ..detectors import Pattern, STConfig, contains_edge, find_friendly_triple, find_pattern, validate_witness
from ..domination import DomKind, is_dom_set, witnesses
from ..errors import InvalidInput, NotSatisfying
from ..graph import Graph, bits, build_graph
from .formula import Flavor, Formula, require_flavor


class GadgetKind(enum.Enum):
    TD_CLAW_K2 = "TdClawK2"
    TD_2P4 = "Td2P4"
    TD_CLAW_K3 = "TdClawK3"
    STD_CLAW_K2 = "StdClawK2"
    STD_LONG_PAW = "StdLongPaw"
    STD_C3C4 = "StdC3C4"
    STD_CLAW_K3 = "StdClawK3"
    STD_3P4_K3 = "Std3P4K3"

    @classmethod
    def parse(cls, text: "str | GadgetKind") -> "GadgetKind":
        if isinstance(text, cls):
            return text
        key = text.strip().lower().replace("-", "").replace("_", "")
        for k in cls:
            if k.value.lower() == key:
                return k
        raise InvalidInput(f"unknown gadget kind {text!r}")


@dataclass(frozen=True)
class Predicted:
    vertex_count: int
    gamma_if_sat: int
    claimed_class: str
    ct_if_sat: int

    def to_json(self) -> dict:
        return {
            "vertexCount": self.vertex_count,
            "gammaIfSat": self.gamma_if_sat,
            "claimedClass": self.claimed_class,
            "ctIfSat": self.ct_if_sat,
        }


@dataclass
class GadgetBundle:
    graph: Graph
    kind: GadgetKind
    formula: Formula
    predicted: Predicted
    dom_kind: DomKind
    variant: str = ""
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "kind": self.kind.value,
            "domKind": self.dom_kind.value,
            "graph": self.graph.to_json(),
            "predicted": self.predicted.to_json(),
        }
        if self.variant:
            out["variant"] = self.variant
        return out


class _Builder:
    def __init__(self):
        self.index: dict[str, int] = {}
        self.edges: set[tuple[int, int]] = set()

    def v(self, *labels: str):
        for s in labels:
            if s in self.index:
                raise ValueError(f"duplicate gadget vertex {s}")
            self.index[s] = len(self.index)

    def e(self, a: str, b: str):
        u, w = self.index[a], self.index[b]
        self.edges.add((min(u, w), max(u, w)))

    def path(self, *labels: str):
        for a, b in zip(labels, labels[1:]):
            self.e(a, b)

    def clique(self, labels):
        for a, b in itertools.combinations(labels, 2):
            self.e(a, b)

    def graph(self) -> Graph:
        labels = {i: s for s, i in self.index.items()}
        return build_graph(len(self.index), sorted(self.edges), labels)


# naming helpers


def _var(f: Formula, v: int) -> str:
    return f.name(v)


def _cl(j: int) -> str:
    return f"c{j + 1}"


def _lit(f: Formula, lit: int) -> str:
    return _var(f, abs(lit)) if lit > 0 else "~" + _var(f, abs(lit))


def _paw(prefix: str, k: int) -> str:
    return f"{prefix}({k})"


def _vars(f: Formula, j: int) -> list[str]:
    return [_var(f, abs(l)) for l in f.clauses[j]]


# builders


def _td2p4(f: Formula) -> Graph:
    b = _Builder()
    for v in range(1, f.n_vars + 1):
        x = _var(f, v)
        b.v(x, "~" + x, f"u_{x}", f"v_{x}")
        b.clique([x, "~" + x, f"u_{x}"])
        b.e(f"u_{x}", f"v_{x}")
    for j, c in enumerate(f.clauses):
        b.v(_cl(j))
        for lit in c:
            b.e(_cl(j), _lit(f, lit))
    b.clique([_cl(j) for j in range(len(f.clauses))])
    return b.graph()


def _std_long_paw(f: Formula) -> Graph:
    b = _Builder()
    for v in range(1, f.n_vars + 1):
        x = _var(f, v)
        b.v(x, "~" + x, f"u_{x}", f"v_{x}", f"w_{x}")
        b.clique([x, "~" + x, f"u_{x}"])
        b.path(f"u_{x}", f"v_{x}", f"w_{x}")
    for j, c in enumerate(f.clauses):
        b.v(_cl(j))
        for lit in c:
            b.e(_cl(j), _lit(f, lit))
    b.clique([_cl(j) for j in range(len(f.clauses))])
    return b.graph()


def _std_c3c4(f: Formula, with_cliques: bool) -> Graph:
    b = _Builder()
    for v in range(1, f.n_vars + 1):
        x = _var(f, v)
        b.v(f"T_{x}", f"F_{x}", f"u_{x}", f"v_{x}", f"w_{x}", f"r_{x}")
        # five-cycle F T v w u, with w drawn on the v-u segment
        b.path(f"F_{x}", f"T_{x}", f"v_{x}", f"w_{x}", f"u_{x}", f"F_{x}")
        b.e(f"w_{x}", f"r_{x}")
    for j in range(len(f.clauses)):
        c = _cl(j)
        b.v(c, "~" + c)
        for x in _vars(f, j):
            b.e(c, f"T_{x}")
            b.e("~" + c, f"F_{x}")
    if with_cliques:
        b.clique([_cl(j) for j in range(len(f.clauses))])
        b.clique(["~" + _cl(j) for j in range(len(f.clauses))])
    return b.graph()


def _td_claw_k2(f: Formula) -> Graph:
    b = _Builder()
    for v in range(1, f.n_vars + 1):
        x = _var(f, v)
        occ = [_cl(j) for j in f.occurrences(v)]
        b.v(f"u_{x}", f"v_{x}", f"T_{x}", f"F_{x}")
        b.e(f"u_{x}", f"v_{x}")
        b.clique([f"u_{x}", f"T_{x}", f"F_{x}"])
        for p in occ:
            a, bb, c, d, t = (f"{s}_{x}^{p}" for s in "abcdt")
            b.v(a, bb, c, d, t)
            b.path(f"T_{x}", a, bb, d, t)
            b.clique([bb, c, d])
            g, h, i, jj, ff = (f"{s}_{x}^{p}" for s in "ghijf")
            b.v(g, h, i, jj, ff)
            b.path(f"F_{x}", g, h, jj, ff)
            b.clique([h, i, jj])
        b.clique([f"a_{x}^{p}" for p in occ])
        b.clique([f"g_{x}^{p}" for p in occ])
    for j in range(len(f.clauses)):
        c = _cl(j)
        xs = _vars(f, j)
        b.v(f"u_{c}")
        for x in xs:
            a, bb, cc, d, t = (f"{s}_{c}^{x}" for s in "abcdt")
            b.v(a, bb, cc, d, t)
            b.e(f"u_{c}", a)
            b.clique([a, bb, cc])
            b.path(cc, d, t)
            b.e(t, f"t_{x}^{c}")
        b.clique([f"a_{c}^{x}" for x in xs])
        b.v(f"v_{c}", f"w_{c}")
        b.e(f"v_{c}", f"w_{c}")
        for x in xs:
            b.v(f"g_{c}^{x}", f"f_{c}^{x}")
            b.e(f"v_{c}", f"g_{c}^{x}")
            b.e(f"g_{c}^{x}", f"f_{c}^{x}")
            b.e(f"f_{c}^{x}", f"f_{x}^{c}")
        b.clique([f"g_{c}^{x}" for x in xs])
    return b.graph()


def _paws_k3(b: _Builder, f: Formula, x: str, occ: list[str], long: bool):
    """Variable gadget shared by the k = 3 total and both semitotal claw reductions."""
    size = 5 if long else 4
    if long:
        b.v(f"T_{x}", f"F_{x}", f"u_{x}", f"v_{x}", f"w_{x}")
        b.clique([f"T_{x}", f"F_{x}", f"u_{x}"])
        b.path(f"u_{x}", f"v_{x}", f"w_{x}")
    else:
        b.v(f"T_{x}", f"F_{x}", f"v_{x}", f"u_{x}")
        b.clique([f"T_{x}", f"F_{x}", f"v_{x}"])
        b.e(f"v_{x}", f"u_{x}")
    for p in occ:
        for R in "TF":
            pre = f"P_{{{x},{R}}}^{p}"
            b.v(*(_paw(pre, k) for k in range(1, size + 1)))
            b.clique([_paw(pre, 1), _paw(pre, 2), _paw(pre, 3)])
            b.path(*(_paw(pre, k) for k in range(3, size + 1)))
        b.v(f"p_{x}^{p}", f"q_{x}^{p}")
        b.e(f"p_{x}^{p}", _paw(f"P_{{{x},T}}^{p}", 2))
        b.e(f"q_{x}^{p}", _paw(f"P_{{{x},F}}^{p}", 1))
        b.e(f"T_{x}", f"p_{x}^{p}")
        b.e(f"F_{x}", f"q_{x}^{p}")
    b.clique([f"p_{x}^{p}" for p in occ])
    b.clique([f"q_{x}^{p}" for p in occ])


def _td_claw_k3(f: Formula) -> Graph:
    b = _Builder()
    for v in range(1, f.n_vars + 1):
        x = _var(f, v)
        _paws_k3(b, f, x, [_cl(j) for j in f.occurrences(v)], long=False)
    for j in range(len(f.clauses)):
        c = _cl(j)
        xs = _vars(f, j)
        for x in xs:
            b.v(f"t_{c}^{x}", f"p_{c}^{x}")
            b.e(f"t_{c}^{x}", f"p_{c}^{x}")
            b.e(f"t_{c}^{x}", _paw(f"P_{{{x},T}}^{c}", 1))
        b.clique([f"p_{c}^{x}" for x in xs])
        b.v(f"u_{c}", f"v_{c}")
        b.e(f"u_{c}", f"v_{c}")
        for x in xs:
            b.v(f"q_{c}^{x}", f"f_{c}^{x}")
            b.e(f"v_{c}", f"q_{c}^{x}")
            b.e(f"q_{c}^{x}", f"f_{c}^{x}")
            b.e(f"f_{c}^{x}", _paw(f"P_{{{x},F}}^{c}", 2))
        b.clique([f"q_{c}^{x}" for x in xs])
    return b.graph()


def _pair(a: str, b: str) -> str:
    return f"{{{a},{b}}}"


def _std_claw_k2(f: Formula) -> Graph:
    b = _Builder()
    for v in range(1, f.n_vars + 1):
        x = _var(f, v)
        _paws_k3(b, f, x, [_cl(j) for j in f.occurrences(v)], long=True)
    for j in range(len(f.clauses)):
        c = _cl(j)
        xs = _vars(f, j)
        pairs = list(itertools.combinations(xs, 2))
        ws = [f"w_{c}^{_pair(*ab)}" for ab in pairs]
        ts = [f"t_{c}^{x}" for x in xs]
        fs = [f"f_{c}^{_pair(*ab)}" for ab in pairs]
        b.v(*ws, *ts, f"u_{c}", *fs)
        b.clique(ws)
        b.clique(ts)
        b.clique(fs)
        for x in xs:
            b.e(f"u_{c}", f"t_{c}^{x}")
            b.e(f"t_{c}^{x}", _paw(f"P_{{{x},T}}^{c}", 1))
        for ab, w, fv in zip(pairs, ws, fs):
            for x in ab:
                b.e(w, f"t_{c}^{x}")
                b.e(w, _paw(f"P_{{{x},T}}^{c}", 1))
                b.e(fv, _paw(f"P_{{{x},F}}^{c}", 2))
    return b.graph()


def _std_claw_k3(f: Formula) -> Graph:
    b = _Builder()
    for v in range(1, f.n_vars + 1):
        x = _var(f, v)
        _paws_k3(b, f, x, [_cl(j) for j in f.occurrences(v)], long=True)
    for j in range(len(f.clauses)):
        c = _cl(j)
        xs = _vars(f, j)
        for x in xs:
            b.v(f"t_{c}^{x}", f"u_{c}^{x}", f"v_{c}^{x}")
            b.clique([f"t_{c}^{x}", f"u_{c}^{x}", f"v_{c}^{x}"])
            b.e(f"t_{c}^{x}", _paw(f"P_{{{x},T}}^{c}", 1))
        b.v(f"a_{c}", f"b_{c}")
        b.clique([f"u_{c}^{x}" for x in xs] + [f"a_{c}"])
        b.clique([f"v_{c}^{x}" for x in xs] + [f"b_{c}"])
        # v_c is drawn on the w_c-u_c segment
        b.v(f"w_{c}", f"v_{c}", f"u_{c}")
        b.path(f"w_{c}", f"v_{c}", f"u_{c}")
        for x in xs:
            b.v(f"q_{c}^{x}", f"f_{c}^{x}")
            b.e(f"u_{c}", f"q_{c}^{x}")
            b.e(f"q_{c}^{x}", f"f_{c}^{x}")
            b.e(f"f_{c}^{x}", _paw(f"P_{{{x},F}}^{c}", 2))
        b.clique([f"q_{c}^{x}" for x in xs])
    return b.graph()


def _other_clauses(f: Formula, v: int, j: int) -> list[int]:
    return [k for k in f.occurrences(v) if k != j]


def _std_3p4_k3(f: Formula) -> Graph:
    G, _ = _std_3p4_k3_with_cliques(f)
    return G


def _std_3p4_k3_with_cliques(f: Formula) -> tuple[Graph, list[list[str]]]:
    b = _Builder()
    m = len(f.clauses)

    def P(j, i):
        return f"p_{{{_cl(j)},{i}}}"

    def Q(j, i):
        return f"q_{{{_cl(j)},{i}}}"

    def V(j, i, x):
        return f"v_{{{_cl(j)},{i}}}^{x}"

    def U(j, i, x, k):
        return f"u_{{{_cl(j)},{i}}}^{{{x},{_cl(k)}}}"

    def T(j, i, x, y):
        return f"t_{{{_cl(j)},{i}}}^{{{x},{y}}}"

    K = {1: [], 2: []}
    for j in range(m):
        vs = [abs(l) for l in f.clauses[j]]
        xs = [_var(f, v) for v in vs]
        for i in (1, 2):
            Vc = [P(j, i), Q(j, i)] + [V(j, i, x) for x in xs]
            Kc = []
            b.v(*Vc)
            for v, x in zip(vs, xs):
                for k in _other_clauses(f, v, j):
                    b.v(U(j, i, x, k))
                    Kc.append(U(j, i, x, k))
                    b.e(V(j, i, x), U(j, i, x, k))
            for x, y in itertools.combinations(xs, 2):
                b.v(T(j, i, x, y))
                Kc.append(T(j, i, x, y))
                b.e(V(j, i, x), T(j, i, x, y))
                b.e(V(j, i, y), T(j, i, x, y))
            b.clique(Vc)
            b.clique(Kc)
            K[i].extend(Kc)
        for i in (1, 2):
            o = 3 - i
            # edge groups (1)/(2): v^l of one copy sees the far t of the other copy
            for x in xs:
                for y, z in itertools.combinations(xs, 2):
                    if x not in (y, z):
                        b.e(V(j, i, x), T(j, o, y, z))
            # edge groups (3)/(4)
            for w in [Q(j, o)] + [V(j, o, x) for x in xs]:
                b.e(P(j, i), w)
    # inter-gadget: u_{b,i}^{l,a} sees v_{a,3-i}^p for every other variable p of a
    for j in range(m):
        for v in (abs(l) for l in f.clauses[j]):
            x = _var(f, v)
            for k in _other_clauses(f, v, j):
                for p in (abs(l) for l in f.clauses[k]):
                    if p == v:
                        continue
                    for i in (1, 2):
                        b.e(U(j, i, x, k), V(k, 3 - i, _var(f, p)))
    b.clique(K[1])
    b.clique(K[2])
    return b.graph(), [K[1], K[2]]


# kind table


@dataclass(frozen=True)
class _KindInfo:
    flavor: Flavor
    dom: DomKind
    vertices: Callable[[int, int], int]
    gamma: Callable[[int, int], int]
    claimed_class: str
    ct: int


KINDS = {
    GadgetKind.TD_CLAW_K2: _KindInfo(
        Flavor.ONE_IN_THREE, DomKind.TOTAL, lambda X, C: 34 * X + 24 * C, lambda X, C: 14 * X + 8 * C, "K1,3-free", 2
    ),
    GadgetKind.TD_2P4: _KindInfo(
        Flavor.STANDARD_3SAT, DomKind.TOTAL, lambda X, C: 4 * X + C, lambda X, C: 2 * X, "2P4-free", 2
    ),
    GadgetKind.TD_CLAW_K3: _KindInfo(
        Flavor.ONE_IN_THREE, DomKind.TOTAL, lambda X, C: 34 * X + 14 * C, lambda X, C: 14 * X + 4 * C, "K1,3-free", 3
    ),
    GadgetKind.STD_CLAW_K2: _KindInfo(
        Flavor.ONE_IN_THREE, DomKind.SEMITOTAL, lambda X, C: 41 * X + 10 * C, lambda X, C: 14 * X + C, "K1,3-free", 2
    ),
    GadgetKind.STD_LONG_PAW: _KindInfo(
        Flavor.STANDARD_3SAT, DomKind.SEMITOTAL, lambda X, C: 5 * X + C, lambda X, C: 2 * X, "C>=5-free", 2
    ),
    GadgetKind.STD_C3C4: _KindInfo(
        Flavor.NAE_POSITIVE, DomKind.SEMITOTAL, lambda X, C: 6 * X + 2 * C, lambda X, C: 2 * X, "C3-free", 2
    ),
    GadgetKind.STD_CLAW_K3: _KindInfo(
        Flavor.ONE_IN_THREE, DomKind.SEMITOTAL, lambda X, C: 41 * X + 20 * C, lambda X, C: 14 * X + 4 * C, "K1,3-free", 3
    ),
    GadgetKind.STD_3P4_K3: _KindInfo(
        Flavor.ONE_IN_THREE, DomKind.SEMITOTAL, lambda X, C: 28 * C, lambda X, C: 2 * C, "3P4-free", 3
    ),
}

_BUILDERS: dict[GadgetKind, Callable[[Formula], Graph]] = {
    GadgetKind.TD_CLAW_K2: _td_claw_k2,
    GadgetKind.TD_2P4: _td2p4,
    GadgetKind.TD_CLAW_K3: _td_claw_k3,
    GadgetKind.STD_CLAW_K2: _std_claw_k2,
    GadgetKind.STD_LONG_PAW: _std_long_paw,
    GadgetKind.STD_CLAW_K3: _std_claw_k3,
    GadgetKind.STD_3P4_K3: _std_3p4_k3,
}


def _bundle(kind, f, G, claimed_class=None, variant="") -> GadgetBundle:
    info = KINDS[kind]
    X, C = f.n_vars, len(f.clauses)
    pred = Predicted(info.vertices(X, C), info.gamma(X, C), claimed_class or info.claimed_class, info.ct)
    return GadgetBundle(G, kind, f, pred, info.dom, variant)


def build_gadget(kind: GadgetKind | str, f: Formula):
    """Build the reduction graph for ``kind`` from formula ``f``.

    Returns one GadgetBundle, except for StdC3C4 which yields the pair
    (G3, G4): G3 without and G4 with the two clause cliques.
    """
    kind = GadgetKind.parse(kind)
    require_flavor(f, KINDS[kind].flavor)
    if kind is GadgetKind.STD_C3C4:
        return (
            _bundle(kind, f, _std_c3c4(f, False), "C3-free", "G3"),
            _bundle(kind, f, _std_c3c4(f, True), "C4-free", "G4"),
        )
    if kind is GadgetKind.STD_3P4_K3:
        G, cliques = _std_3p4_k3_with_cliques(f)
        bundle = _bundle(kind, f, G)
        bundle.notes["p4_hitting_cliques"] = cliques
        return bundle
    return _bundle(kind, f, _BUILDERS[kind](f))


def check_claimed_class(bundle: GadgetBundle) -> tuple[bool, str]:
    """Verify the class the construction claims; returns (holds, how or counterexample)."""
    G = bundle.graph
    claim = bundle.predicted.claimed_class
    if claim in ("K1,3-free", "2P4-free"):
        emb = contains_induced(G, claim[:-5])
        return emb is None, "induced search" if emb is None else _names(G, emb)
    if claim in ("C3-free", "C4-free"):
        k = int(claim[1])
        hole = find_hole(G, k, k)
        return hole is None, "induced search" if hole is None else _names(G, hole)
    if claim == "C>=5-free":
        hole = find_hole(G, 5)
        return hole is None, "chordless path search" if hole is None else _names(G, hole)
    if claim == "3P4-free":
        cliques = [G.vset(*Q) for Q in bundle.notes.get("p4_hitting_cliques", [])]
        if len(cliques) == 2 and kp4_free_by_cliques(G, cliques):
            return True, "two cliques meet every induced P4"
        emb = contains_induced(G, "3P4")
        return emb is None, "induced search" if emb is None else _names(G, emb)
    raise InvalidInput(f"unknown class claim {claim!r}")


# certificates


def _truth(f: Formula, a) -> dict[int, bool]:
    if isinstance(a, dict):
        return {v: bool(a[v]) for v in range(1, f.n_vars + 1)}
    if len(a) != f.n_vars:
        raise InvalidInput(f"assignment has {len(a)} values for {f.n_vars} variables")
    return {v: bool(a[v - 1]) for v in range(1, f.n_vars + 1)}


def _true_var(f: Formula, val, j: int) -> int:
    return next(abs(l) for l in f.clauses[j] if val[abs(l)])


def certificate_labels(bundle: GadgetBundle, a) -> list[str]:
    """The dominating set the satisfiability argument builds, as vertex labels."""
    f = bundle.formula
    if not f.satisfied_by(a):
        raise NotSatisfying("assignment does not satisfy the formula")
    val = _truth(f, a)
    kind = bundle.kind
    out: list[str] = []
    for v in range(1, f.n_vars + 1):
        x = _var(f, v)
        occ = [_cl(j) for j in f.occurrences(v)]
        if kind is GadgetKind.TD_2P4:
            out += [f"u_{x}", x if val[v] else "~" + x]
        elif kind is GadgetKind.STD_LONG_PAW:
            out += [f"v_{x}", x if val[v] else "~" + x]
        elif kind is GadgetKind.STD_C3C4:
            out += [f"w_{x}", f"T_{x}" if val[v] else f"F_{x}"]
        elif kind is GadgetKind.TD_CLAW_K2:
            if val[v]:
                out += [f"u_{x}", f"T_{x}"] + [f"{s}_{x}^{p}" for p in occ for s in "dthj"]
            else:
                out += [f"u_{x}", f"F_{x}"] + [f"{s}_{x}^{p}" for p in occ for s in "bdjf"]
        elif kind is GadgetKind.TD_CLAW_K3:
            ks = (1, 3) if val[v] else (2, 3)
            out += [f"v_{x}", f"T_{x}" if val[v] else f"F_{x}"]
            out += [_paw(f"P_{{{x},{R}}}^{p}", k) for p in occ for R in "TF" for k in ks]
        elif kind in (GadgetKind.STD_CLAW_K2, GadgetKind.STD_CLAW_K3):
            ks = (1, 4) if val[v] else (2, 4)
            out += [f"v_{x}", f"T_{x}" if val[v] else f"F_{x}"]
            out += [_paw(f"P_{{{x},{R}}}^{p}", k) for p in occ for R in "TF" for k in ks]
    for j in range(len(f.clauses)):
        c = _cl(j)
        if kind in (GadgetKind.TD_2P4, GadgetKind.STD_LONG_PAW, GadgetKind.STD_C3C4):
            break
        t = _true_var(f, val, j)
        x = _var(f, t)
        others = [_var(f, abs(l)) for l in f.clauses[j] if abs(l) != t]
        if kind is GadgetKind.TD_CLAW_K2:
            out += [f"v_{c}", f"g_{c}^{x}", f"c_{c}^{x}", f"a_{c}^{x}"]
            out += [f"{s}_{c}^{y}" for y in others for s in "cd"]
        elif kind is GadgetKind.TD_CLAW_K3:
            out += [f"v_{c}", f"q_{c}^{x}", f"p_{c}^{others[0]}", f"p_{c}^{others[1]}"]
        elif kind is GadgetKind.STD_CLAW_K2:
            out += [f"t_{c}^{others[0]}"]
        elif kind is GadgetKind.STD_CLAW_K3:
            # w_c would have no witness here; v_c dominates the same vertices and has q as witness
            out += [f"v_{c}", f"q_{c}^{x}", f"v_{c}^{others[0]}", f"u_{c}^{others[1]}"]
        elif kind is GadgetKind.STD_3P4_K3:
            out += [f"v_{{{c},1}}^{x}", f"v_{{{c},2}}^{x}"]
    return out


def certificate_from_assignment(bundle: GadgetBundle, a) -> int:
    """Certificate dominating set as a bitset of ``bundle.graph``."""
    return bundle.graph.vset(*certificate_labels(bundle, a))


# structural side-claims on the certificate


@dataclass
class SideClaim:
    name: str
    holds: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"claim": self.name, "holds": self.holds, "detail": self.detail}


def _lits_of(f: Formula, j: int) -> list[int]:
    return list(f.clauses[j])


def _augmented(bundle: GadgetBundle, D: int, val, j: int) -> tuple[int, str, list[str]] | None:
    """The proof's size gamma+1 set for clause j and the promised shape inside it."""
    G, f, kind = bundle.graph, bundle.formula, bundle.kind
    c = _cl(j)
    if kind is GadgetKind.TD_CLAW_K2:
        t = _true_var(f, val, j)
        x = _var(f, t)
        y = next(_var(f, abs(l)) for l in f.clauses[j] if abs(l) != t)
        A = D | G.vset(f"a_{c}^{y}")
        return A, "P4", [f"c_{c}^{x}", f"a_{c}^{x}", f"a_{c}^{y}", f"c_{c}^{y}"]
    if kind in (GadgetKind.TD_2P4, GadgetKind.STD_LONG_PAW):
        l1, l2 = _lits_of(f, j)[:2]
        x, y = _var(f, abs(l1)), _var(f, abs(l2))
        gadget = [f"u_{x}", f"v_{x}", f"u_{y}", f"v_{y}", x, "~" + x, y, "~" + y]
        if kind is GadgetKind.STD_LONG_PAW:
            gadget += [f"w_{x}", f"w_{y}"]
        A = D & ~G.vset(*gadget)
        lx, ly = _lit(f, l1), _lit(f, l2)
        if kind is GadgetKind.TD_2P4:
            A |= G.vset(lx, f"u_{x}", ly, f"u_{y}", c)
            # the path runs u_x, x, c, y (c is not adjacent to u_y)
            return A, "P4", [f"u_{x}", lx, c, ly]
        A |= G.vset(c, lx, f"v_{x}", ly, f"v_{y}")
        return A, "O4", [lx, c, ly, f"v_{y}"]
    if kind is GadgetKind.STD_C3C4:
        xs = _vars(f, j)
        for side, hub in (("F", "~" + c), ("T", c)):
            members = [x for x in xs if D >> G.vertex(f"{side}_{x}") & 1]
            if len(members) >= 2:
                x, y = members[:2]
                return D | G.vset(hub), "O4", [f"{side}_{x}", hub, f"{side}_{y}", f"w_{y}"]
        return None
    if kind is GadgetKind.STD_CLAW_K2:
        t = _true_var(f, val, j)
        x = _var(f, t)
        y = next(_var(f, abs(l)) for l in f.clauses[j] if abs(l) != t)
        A = D | G.vset(f"t_{c}^{x}")
        pre = f"P_{{{x},T}}^{c}"
        return A, "O4", [f"t_{c}^{y}", f"t_{c}^{x}", _paw(pre, 1), _paw(pre, 4)]
    return None


def side_claims(bundle: GadgetBundle, a) -> list[SideClaim]:
    """Check the structural facts the proofs state about the certificate."""
    G, f, kind = bundle.graph, bundle.formula, bundle.kind
    dk = bundle.dom_kind
    D = certificate_from_assignment(bundle, a)
    val = _truth(f, a)
    pred = bundle.predicted
    claims = [
        SideClaim("dominating", is_dom_set(G, D, dk)),
        SideClaim("size", D.bit_count() == pred.gamma_if_sat, f"{D.bit_count()} vs {pred.gamma_if_sat}"),
    ]
    if dk is DomKind.TOTAL:
        w = find_pattern(G, D, Pattern.P3)
        claims.append(SideClaim("no P3", w is None, "" if w is None else _names(G, w)))
    else:
        w = find_friendly_triple(G, D)
        claims.append(SideClaim("no friendly triple", w is None, "" if w is None else _names(G, w)))
    if kind is GadgetKind.STD_3P4_K3:
        claims.append(SideClaim("independent", not contains_edge(G, D)))
        unique = all(witnesses(G, D, x).bit_count() == 1 for x in bits(D))
        claims.append(SideClaim("unique witnesses", unique))
    if pred.ct_if_sat == 2:
        for j in range(len(f.clauses)):
            aug = _augmented(bundle, D, val, j)
            if aug is None:
                claims.append(SideClaim(f"augmented set for {_cl(j)}", False, "no shape available"))
                continue
            A, shape, names = aug
            key = Pattern.P4 if shape == "P4" else STConfig.O4
            tup = [G.vertex(s) for s in names]
            ok = is_dom_set(G, A, dk) and A.bit_count() == pred.gamma_if_sat + 1 and validate_witness(G, A, key, tup)
            claims.append(SideClaim(f"{shape} in augmented set for {_cl(j)}", ok, " ".join(names)))
    return claims


def _names(G: Graph, vs) -> str:
    return " ".join(G.label(v) for v in vs)
