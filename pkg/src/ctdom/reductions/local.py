"""Local lower-bound claims on gadget pieces, checked exhaustively.

A claim talks about the trace D ∩ S of any dominating set D on a piece S
of a gadget.  The check only uses constraints that are visible inside S:

* a vertex must be dominated from S only when every vertex that could
  dominate it lies in S (otherwise it may be dominated from outside);
* in the semitotal case a chosen vertex needs a witness in S only when
  its whole radius-2 ball lies in S.

Every trace of a real dominating set satisfies these constraints, so a
bound proved over all locally valid traces holds for every global set.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..domination import DomKind, _meter
from ..graph import Graph, bits
from .formula import Formula
from .gadgets import GadgetBundle, GadgetKind, _cl, _paw, _var, _vars


@dataclass(frozen=True)
class LocalClaim:
    """Over all locally valid traces T on S: |T ∩ Z| >= bound.

    With ``absent`` set, the claim is instead that no locally valid trace
    avoids ``absent`` entirely (so D always meets it).
    """

    name: str
    piece: tuple[str, ...]
    counted: tuple[str, ...] = ()
    bound: int = 0
    absent: tuple[str, ...] = ()


@dataclass
class LocalResult:
    claim: LocalClaim
    holds: bool
    value: int | None
    trace: int | None

    def to_json(self, G: Graph) -> dict:
        return {
            "claim": self.claim.name,
            "holds": self.holds,
            "min": self.value,
            "trace": None if self.trace is None else [G.label(v) for v in bits(self.trace)],
        }


def local_minimum(G: Graph, kind: DomKind, S: int, Z: int, excluded: int = 0, budget=None):
    """Minimum |T ∩ Z| over locally valid traces T ⊆ S avoiding ``excluded``.

    Returns (value, T) or (None, None) when no valid trace exists.
    """
    meter = _meter(budget)
    closed = kind is DomKind.SEMITOTAL
    cov = [(G.adj[v] | (1 << v)) if closed else G.adj[v] for v in range(G.n)]
    internal = [v for v in bits(S) if cov[v] & ~S == 0]
    needs_witness = 0
    near = [0] * G.n
    if closed:
        for v in bits(S):
            ball = G.ball(v, 2)
            near[v] = ball & ~(1 << v)
            if ball & ~S == 0:
                needs_witness |= 1 << v
    best = [None, None]

    def open_constraint(T: int, X: int):
        """Options for the most constrained unmet constraint, or None if all are met."""
        pick = None
        for v in internal:
            if cov[v] & T == 0:
                opts = cov[v] & ~X
                if pick is None or opts.bit_count() < pick.bit_count():
                    pick = opts
                    if opts == 0:
                        return 0
        for x in bits(T & needs_witness):
            if near[x] & T == 0:
                opts = near[x] & S & ~X
                if pick is None or opts.bit_count() < pick.bit_count():
                    pick = opts
                    if opts == 0:
                        return 0
        return pick

    def search(T: int, X: int):
        meter.tick()
        cost = (T & Z).bit_count()
        if best[0] is not None and cost >= best[0]:
            return
        opts = open_constraint(T, X)
        if opts is None:
            best[0], best[1] = cost, T
            return
        # free vertices first, then counted ones
        order = [c for c in bits(opts & ~Z)] + [c for c in bits(opts & Z)]
        done = 0
        for c in order:
            search(T | (1 << c), X | done)
            done |= 1 << c

    search(0, excluded & S)
    return best[0], best[1]


def check_claim(G: Graph, kind: DomKind, claim: LocalClaim, budget=None) -> LocalResult:
    S = G.vset(*claim.piece)
    if claim.absent:
        value, T = local_minimum(G, kind, S, 0, G.vset(*claim.absent), budget)
        return LocalResult(claim, T is None, None, T)
    value, T = local_minimum(G, kind, S, G.vset(*claim.counted), 0, budget)
    return LocalResult(claim, value is not None and value >= claim.bound, value, T)


# claim lists


def _paw_vertices(x: str, p: str, R: str, size: int) -> list[str]:
    return [_paw(f"P_{{{x},{R}}}^{p}", k) for k in range(1, size + 1)]


def _variable_gadget(f: Formula, v: int, size: int) -> tuple[list[str], list[list[str]]]:
    x = _var(f, v)
    core = [f"T_{x}", f"F_{x}", f"u_{x}", f"v_{x}"] + ([f"w_{x}"] if size == 5 else [])
    # the variable's own paw lists P(1)..P(size) in order
    own = [f"T_{x}", f"F_{x}", f"u_{x}", f"v_{x}", f"w_{x}"] if size == 5 else [f"T_{x}", f"F_{x}", f"v_{x}", f"u_{x}"]
    paws = [own]
    everything = list(core)
    for j in f.occurrences(v):
        p = _cl(j)
        for R in "TF":
            pv = _paw_vertices(x, p, R, size)
            paws.append(pv)
            everything += pv
        everything += [f"p_{x}^{p}", f"q_{x}^{p}"]
    return everything, paws


def claims_for(bundle: GadgetBundle) -> list[LocalClaim]:
    f, kind = bundle.formula, bundle.kind
    out: list[LocalClaim] = []
    if kind is GadgetKind.TD_CLAW_K3:
        for v in range(1, f.n_vars + 1):
            x = _var(f, v)
            gx, paws = _variable_gadget(f, v, 4)
            for P in paws:
                out.append(LocalClaim(f"|D ∩ V({P[0]} paw)| >= 2", tuple(P), tuple(P), 2))
                out.append(LocalClaim(f"{P[2]} ∈ D", tuple(P), absent=(P[2],)))
            out.append(LocalClaim(f"|D ∩ V(G_{x})| >= 14", tuple(gx), tuple(gx), 14))
        for j in range(len(f.clauses)):
            c = _cl(j)
            xs = _vars(f, j)
            gt = [f"t_{c}^{x}" for x in xs] + [f"p_{c}^{x}" for x in xs]
            gf = [f"u_{c}", f"v_{c}"] + [f"q_{c}^{x}" for x in xs] + [f"f_{c}^{x}" for x in xs]
            out.append(LocalClaim(f"|D ∩ V(G_{c}^T)| >= 2", tuple(gt), tuple(gt), 2))
            out.append(LocalClaim(f"|D ∩ V(G_{c}^F)| >= 2", tuple(gf), tuple(gf), 2))
            out.append(LocalClaim(f"v_{c} ∈ D", tuple(gf), absent=(f"v_{c}",)))
    elif kind is GadgetKind.STD_CLAW_K3:
        for v in range(1, f.n_vars + 1):
            x = _var(f, v)
            gx, paws = _variable_gadget(f, v, 5)
            for P in paws:
                out.append(LocalClaim(f"|D ∩ V({P[0]} long paw)| >= 2", tuple(P), tuple(P), 2))
                out.append(LocalClaim(f"D meets {{{P[3]}, {P[4]}}}", tuple(P), absent=(P[3], P[4])))
            out.append(LocalClaim(f"|D ∩ V(G_{x})| >= 14", tuple(gx), tuple(gx), 14))
        for j in range(len(f.clauses)):
            c = _cl(j)
            xs = _vars(f, j)
            us = [f"u_{c}^{x}" for x in xs] + [f"a_{c}"]
            vs = [f"v_{c}^{x}" for x in xs] + [f"b_{c}"]
            gt = [f"t_{c}^{x}" for x in xs] + us + vs
            core = [f"u_{c}", f"v_{c}", f"w_{c}"] + [f"q_{c}^{x}" for x in xs]
            gf = core + [f"f_{c}^{x}" for x in xs]
            out.append(LocalClaim(f"|D ∩ {{u_{c}, v_{c}, w_{c}, q_{c}}}| >= 2", tuple(gf), tuple(core), 2))
            out.append(LocalClaim(f"D meets {{u_{c}^*, a_{c}}}", tuple(gt), tuple(us), 1))
            out.append(LocalClaim(f"D meets {{v_{c}^*, b_{c}}}", tuple(gt), tuple(vs), 1))
            out.append(LocalClaim(f"|D ∩ V(G_{c})| >= 4", tuple(gt + gf), tuple(gt + gf), 4))
    elif kind is GadgetKind.STD_3P4_K3:
        for j in range(len(f.clauses)):
            c = _cl(j)
            xs = _vars(f, j)
            piece = [
                s for i in (1, 2) for s in [f"p_{{{c},{i}}}", f"q_{{{c},{i}}}"] + [f"v_{{{c},{i}}}^{x}" for x in xs]
            ]
            out.append(LocalClaim(f"|D ∩ (V_{{{c},1}} ∪ V_{{{c},2}})| >= 2", tuple(piece), tuple(piece), 2))
    elif kind is GadgetKind.STD_LONG_PAW:
        for v in range(1, f.n_vars + 1):
            x = _var(f, v)
            gx = (x, "~" + x, f"u_{x}", f"v_{x}", f"w_{x}")
            out.append(LocalClaim(f"|D ∩ V(G_{x})| >= 2", gx, gx, 2))
    elif kind is GadgetKind.STD_C3C4:
        for v in range(1, f.n_vars + 1):
            x = _var(f, v)
            gx = tuple(f"{s}_{x}" for s in "TFuvwr")
            out.append(LocalClaim(f"|D ∩ V(G_{x})| >= 2", gx, gx, 2))
    return out


def check_local_claims(bundle: GadgetBundle, budget=None) -> list[LocalResult]:
    return [check_claim(bundle.graph, bundle.dom_kind, c, budget) for c in claims_for(bundle)]
