"""Induced subgraph search, H-freeness and the dichotomy dispatcher."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .domination import DomKind
from .errors import InvalidSpec
from .graph import Graph, bits, induced_subgraph, make_named_graph

MAX_PATTERN = 12


def _as_graph(H: Graph | str) -> Graph:
    return make_named_graph(H) if isinstance(H, str) else H


def contains_induced(G: Graph, H: Graph | str) -> list[int] | None:
    """First embedding of H as an induced subgraph of G, or None.

    The embedding lists, for each vertex of H in index order, its image in
    G.  Images are tried in increasing order, so the result is the
    lexicographically smallest embedding.
    """
    H = _as_graph(H)
    if H.n > G.n:
        return None
    if H.n == 0:
        return []
    hdeg = [H.degree(i) for i in range(H.n)]
    gdeg = [G.degree(v) for v in range(G.n)]
    image: list[int] = []

    def rec(i: int, used: int) -> bool:
        if i == H.n:
            return True
        cand = G.full & ~used
        for j, gj in enumerate(image):
            if H.adj[i] >> j & 1:
                cand &= G.adj[gj]
            else:
                cand &= ~G.adj[gj]
        for v in bits(cand):
            if gdeg[v] < hdeg[i]:
                continue
            image.append(v)
            if rec(i + 1, used | (1 << v)):
                return True
            image.pop()
        return False

    return list(image) if rec(0, 0) else None


def is_h_free(G: Graph, H: Graph | str) -> bool:
    return contains_induced(G, H) is None


def is_induced_subgraph_of(H: Graph | str, F: Graph | str) -> bool:
    """H ⊆_i F."""
    return contains_induced(_as_graph(F), _as_graph(H)) is not None


class Verdict(enum.Enum):
    POLYNOMIAL = "PolynomialTime"
    HARD = "Hard"


@dataclass(frozen=True)
class DichotomyVerdict:
    verdict: Verdict
    reason: str

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "reason": self.reason}


def _families(kind: DomKind, t: int) -> list[tuple[str, str]]:
    second = f"P4+{t}P3" if kind is DomKind.TOTAL else f"P3+{t}P2"
    return [(f"P5+{t}K1", "P5+tK1"), (second, second.replace(str(t), "t", 1))]


def _hard_reason(H: Graph, kind: DomKind) -> str:
    """Which hardness clause applies, following the case order of the dichotomy proofs."""
    comps = [induced_subgraph(H, c) for c in H.components()]
    if any(C.m >= C.n for C in comps):
        return "H contains a cycle"
    if any(H.degree(v) >= 3 for v in range(H.n)):
        return "H contains a vertex of degree at least 3"
    sizes = sorted((C.n for C in comps), reverse=True)
    if sizes[0] >= 6:
        return "H has a path component on at least 6 vertices"
    if kind is DomKind.TOTAL:
        if len(sizes) > 1 and sizes[1] >= 4:
            return "H contains 2P4"
        if sizes[0] == 5 and len(sizes) > 1 and sizes[1] >= 2:
            return "H contains P5+P2"
    else:
        if sizes[0] >= 4 and len(sizes) > 1 and sizes[1] >= 2:
            return "H has a 4- or 5-vertex path component and another component with an edge"
        if len(sizes) > 1 and sizes[1] == 3:
            return "H contains 2P3"
    return "H is outside both polynomial families"


def classify_dichotomy(H: Graph | str, kind: DomKind | str, k: int = 2) -> DichotomyVerdict:
    """Complexity of Contraction Number(pi, k) on H-free graphs, k in {1, 2}.

    Polynomial iff H is an induced subgraph of P5+tK1, or of P4+tP3 (total)
    / P3+tP2 (semitotal), with t = |V(H)|; hard otherwise.
    """
    kind = DomKind.parse(kind)
    if k not in (1, 2):
        raise InvalidSpec("the dichotomy covers k = 1 and k = 2 only")
    H = _as_graph(H)
    if H.n > MAX_PATTERN:
        raise InvalidSpec(f"pattern larger than {MAX_PATTERN} vertices")
    t = H.n
    for spec, name in _families(kind, t):
        if is_induced_subgraph_of(H, spec):
            return DichotomyVerdict(Verdict.POLYNOMIAL, f"H ⊆_i {name}")
    return DichotomyVerdict(Verdict.HARD, _hard_reason(H, kind))


def find_hole(G: Graph, min_len: int = 4, max_len: int | None = None) -> list[int] | None:
    """An induced cycle with min_len <= length <= max_len, or None.

    Grows chordless paths from each start vertex s, using only vertices
    above s, and closes them when the newest vertex is adjacent to s.
    """
    top = G.n if max_len is None else max_len
    if min_len < 3:
        raise InvalidSpec("cycles have at least 3 vertices")
    for s in range(G.n):
        above = G.full & ~((2 << s) - 1)
        for p1 in bits(G.adj[s] & above):
            path = [s, p1]
            # vertices adjacent to some interior path vertex other than the tip
            blocked = 0

            def rec(blocked: int) -> bool:
                tip = path[-1]
                cand = G.adj[tip] & above & ~blocked
                for v in path:
                    cand &= ~(1 << v)
                for w in bits(cand):
                    if G.adj[s] >> w & 1:
                        if min_len <= len(path) + 1 <= top:
                            path.append(w)
                            return True
                        continue
                    if len(path) + 1 >= top:
                        continue
                    path.append(w)
                    if rec(blocked | G.adj[tip]):
                        return True
                    path.pop()
                return False

            if rec(blocked):
                return path
    return None


def is_hole_free(G: Graph, min_len: int, max_len: int | None = None) -> bool:
    return find_hole(G, min_len, max_len) is None


def kp4_free_by_cliques(G: Graph, cliques: list[int]) -> bool:
    """Sufficient test for (len(cliques)+1)P4-freeness.

    If every listed set is a clique and G minus their union has no induced
    P4, every induced P4 meets one of the cliques; two P4s meeting the same
    clique are adjacent or overlap, so no len(cliques)+1 of them can be
    pairwise far apart.
    """
    union = 0
    for Q in cliques:
        for v in bits(Q):
            if (G.adj[v] | (1 << v)) & Q != Q:
                return False
        union |= Q
    rest = induced_subgraph(G, G.full & ~union)
    return is_h_free(rest, "P4")
