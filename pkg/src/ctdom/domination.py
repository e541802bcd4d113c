"""Total and semitotal domination: validity, exact minimum, enumeration."""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidInput, IsolatedVertex, NotInSet, Timeout
from .graph import Graph, bits


class DomKind(enum.Enum):
    TOTAL = "total"
    SEMITOTAL = "semitotal"

    @classmethod
    def parse(cls, text: str | "DomKind") -> "DomKind":
        if isinstance(text, DomKind):
            return text
        return cls(text.strip().lower())


TOTAL = DomKind.TOTAL
SEMITOTAL = DomKind.SEMITOTAL


@dataclass(frozen=True)
class SolverBudget:
    """Node and wall-clock limits for the exact solvers."""

    max_nodes: int = 10**8
    max_seconds: float = 60.0

    def meter(self) -> "Meter":
        return Meter(self)


class Meter:
    """Running consumption against a budget. Raises Timeout when exhausted."""

    __slots__ = ("budget", "nodes", "deadline")

    def __init__(self, budget: SolverBudget):
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.max_seconds

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise Timeout(f"node budget {self.budget.max_nodes} exhausted")
        if not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise Timeout(f"time budget {self.budget.max_seconds}s exhausted")


DEFAULT_BUDGET = SolverBudget()


def _meter(budget) -> Meter:
    if isinstance(budget, Meter):
        return budget
    return (budget or DEFAULT_BUDGET).meter()


def _cover_sets(G: Graph, kind: DomKind) -> tuple[int, ...]:
    """cov[w]: vertices dominated by w (open nbhd for total, closed for semitotal)."""
    if kind is DomKind.TOTAL:
        return G.adj
    return tuple(a | (1 << v) for v, a in enumerate(G.adj))


def _near(G: Graph) -> tuple[int, ...]:
    """near[x]: possible witnesses of x, i.e. vertices at distance 1 or 2."""
    return tuple(G.ball(v, 2) & ~(1 << v) for v in range(G.n))


def check_admissible(G: Graph, kind: DomKind):
    if G.n == 0:
        raise InvalidInput("the empty graph has no dominating set of the required kind")
    iso = G.isolated_vertices()
    if iso:
        raise IsolatedVertex(iso[0])


def is_dom_set(G: Graph, D: int, kind: DomKind) -> bool:
    kind = DomKind.parse(kind)
    if D & ~G.full:
        raise InvalidInput("D contains indices outside the graph")
    cov = _cover_sets(G, kind)
    dom = 0
    for v in bits(D):
        dom |= cov[v]
    if dom != G.full:
        return False
    if kind is DomKind.SEMITOTAL:
        for x in bits(D):
            if not G.ball(x, 2) & D & ~(1 << x):
                return False
    return True


def private_neighborhood(G: Graph, D: int, x: int) -> int:
    """PN_D(x) = {y : N(y) & D == {x}}; members of D may qualify."""
    if not D >> x & 1:
        raise NotInSet(f"{x} is not in D")
    out = 0
    bit = 1 << x
    for y in range(G.n):
        if G.adj[y] & D == bit:
            out |= 1 << y
    return out


def witnesses(G: Graph, D: int, x: int) -> int:
    """w_D(x) = {y in D - {x} : d(x, y) <= 2}."""
    if not D >> x & 1:
        raise NotInSet(f"{x} is not in D")
    return G.ball(x, 2) & D & ~(1 << x)


# exact minimum


def _greedy(G: Graph, kind: DomKind, U: int, cov, near) -> int:
    D = 0
    dom = 0
    while U & ~dom:
        undom = U & ~dom
        best_w, best_c = -1, -1
        for w in bits(U):
            c = (cov[w] & undom).bit_count()
            if c > best_c:
                best_w, best_c = w, c
        D |= 1 << best_w
        dom |= cov[best_w]
    if kind is DomKind.SEMITOTAL:
        for x in list(bits(D)):
            if not near[x] & D:
                y = next(bits(G.adj[x]))
                D |= 1 << y
    if D.bit_count() < 2:
        # a single vertex never suffices; pad with a neighbour
        x = next(bits(D)) if D else next(bits(U))
        D |= (1 << x) | (1 << next(bits(G.adj[x])))
    return D


def _min_component(G: Graph, kind: DomKind, U: int, meter: Meter, cov, near) -> int:
    semi = kind is DomKind.SEMITOTAL
    best_set = _greedy(G, kind, U, cov, near)
    best = best_set.bit_count()
    if best <= 2:
        return best_set

    def search(D: int, X: int, dom: int, k: int):
        nonlocal best, best_set
        meter.tick()
        undom = U & ~dom
        pick = None
        pick_n = 1 << 30
        lb = 0
        if undom:
            avail = U & ~X & ~D
            maxcov = 0
            for w in bits(avail):
                c = (cov[w] & undom).bit_count()
                if c > maxcov:
                    maxcov = c
            if maxcov == 0:
                return
            lb = -(-undom.bit_count() // maxcov)
            if k + lb >= best:
                return
            for v in bits(undom):
                c = cov[v] & ~X
                cn = c.bit_count()
                if cn < pick_n:
                    pick, pick_n = c, cn
                    if cn <= 1:
                        break
        if semi and pick_n > 1:
            for x in bits(D):
                if not near[x] & D:
                    c = near[x] & ~X
                    cn = c.bit_count()
                    if cn < pick_n:
                        pick, pick_n = c, cn
                        if cn <= 1:
                            break
        if pick is None:
            if k < best:
                best, best_set = k, D
            return
        if pick_n == 0 or k + max(lb, 1) >= best:
            return
        order = sorted(bits(pick), key=lambda w: -(cov[w] & undom).bit_count())
        for w in order:
            search(D | (1 << w), X, dom | cov[w], k + 1)
            X |= 1 << w
            if k + 1 >= best:
                return

    search(0, 0, 0, 0)
    return best_set


def min_dom_set(G: Graph, kind: DomKind, budget: SolverBudget | Meter | None = None) -> int:
    """A minimum dominating set of the given kind, as a bitset.

    Disconnected graphs are solved component by component.
    """
    kind = DomKind.parse(kind)
    check_admissible(G, kind)
    meter = _meter(budget)
    cov = _cover_sets(G, kind)
    near = _near(G)
    D = 0
    for comp in G.components():
        D |= _min_component(G, kind, comp, meter, cov, near)
    return D


def gamma(G: Graph, kind: DomKind, budget: SolverBudget | Meter | None = None, method: str = "bnb") -> int:
    """gamma_t(G) or gamma_t2(G).

    ``method="bnb"`` runs branch and bound; ``method="enumerate"`` scans
    subsets by increasing size and is meant as a cross-check for n <= 20.
    """
    kind = DomKind.parse(kind)
    if method == "enumerate":
        return gamma_by_enumeration(G, kind, budget)
    return min_dom_set(G, kind, budget).bit_count()


def gamma_by_enumeration(G: Graph, kind: DomKind, budget=None) -> int:
    kind = DomKind.parse(kind)
    check_admissible(G, kind)
    meter = _meter(budget)
    total = 0
    for comp in G.components():
        verts = list(bits(comp))
        for k in range(2, len(verts) + 1):
            found = False
            for combo in itertools.combinations(verts, k):
                meter.tick()
                D = 0
                for v in combo:
                    D |= 1 << v
                if _valid_on(G, kind, D, comp):
                    found = True
                    break
            if found:
                total += k
                break
    return total


def _valid_on(G: Graph, kind: DomKind, D: int, U: int) -> bool:
    dom = 0
    cov = G.adj
    for v in bits(D):
        dom |= cov[v] if kind is DomKind.TOTAL else cov[v] | (1 << v)
    if dom & U != U:
        return False
    if kind is DomKind.SEMITOTAL:
        for x in bits(D):
            if not G.ball(x, 2) & D & ~(1 << x):
                return False
    return True


# enumeration


def enumerate_dom_sets(
    G: Graph, kind: DomKind, size: int, budget: SolverBudget | Meter | None = None
) -> Iterator[int]:
    """Lazily yield every dominating set of the given kind with exactly ``size`` members.

    Sets come out in lexicographic order of their sorted vertex tuples,
    the same order as ``itertools.combinations``.
    """
    kind = DomKind.parse(kind)
    check_admissible(G, kind)
    meter = _meter(budget)
    n = G.n
    full = G.full
    semi = kind is DomKind.SEMITOTAL
    cov = _cover_sets(G, kind)
    near = _near(G)
    suffix_cover = [0] * (n + 1)
    suffix_maxcov = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_cover[i] = suffix_cover[i + 1] | cov[i]
        suffix_maxcov[i] = max(suffix_maxcov[i + 1], cov[i].bit_count())
    if size < 0 or size > n:
        return
    stack = [(0, 0, 0, 0)]
    while stack:
        i, D, dom, k = stack.pop()
        meter.tick()
        if k == size:
            if dom == full and (not semi or all(near[x] & D for x in bits(D))):
                yield D
            continue
        if n - i < size - k:
            continue
        undom = full & ~dom
        if undom & ~suffix_cover[i]:
            continue
        if undom.bit_count() > (size - k) * suffix_maxcov[i]:
            continue
        if semi:
            later = full & ~((1 << i) - 1)
            if any(not near[x] & D and not near[x] & later for x in bits(D)):
                continue
        stack.append((i + 1, D, dom, k))
        stack.append((i + 1, D | (1 << i), dom | cov[i], k + 1))


def has_dom_set_of_size(G: Graph, kind: DomKind, size: int, budget=None) -> bool:
    return next(enumerate_dom_sets(G, kind, size, budget), None) is not None
