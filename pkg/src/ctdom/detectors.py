"""Non-induced pattern detection inside a vertex set.

Every shape is a small table of constraints between tuple positions:
``E`` means the two vertices are adjacent in G, ``D2`` means they are at
distance exactly two in G, ``LE2`` means distance one or two.  Only the
listed relations are required; nothing is said about other pairs.
Witnesses are returned as the lexicographically smallest tuple.
"""

from __future__ import annotations

import enum
from typing import Sequence

from .graph import Graph, bits


class Pattern(enum.Enum):
    P3 = "P3"
    P4 = "P4"
    K13 = "K13"
    TWO_P3 = "2P3"


class STConfig(enum.Enum):
    O1 = 1
    O2 = 2
    O3 = 3
    O4 = 4
    O5 = 5
    O6 = 6
    O7 = 7


E, D2, LE2 = "E", "D2", "LE2"

# (size, relations, pairs allowed to coincide); positions are 0-based,
# so drawn vertex i sits at position i - 1
SHAPES = {
    Pattern.P3: (3, [(E, 0, 1), (E, 1, 2)], ()),
    Pattern.P4: (4, [(E, 0, 1), (E, 1, 2), (E, 2, 3)], ()),
    Pattern.K13: (4, [(E, 0, 1), (E, 0, 2), (E, 0, 3)], ()),
    Pattern.TWO_P3: (6, [(E, 0, 1), (E, 1, 2), (E, 3, 4), (E, 4, 5)], ()),
    STConfig.O1: (6, [(E, 0, 1), (E, 1, 2), (E, 3, 4), (E, 4, 5)], ()),
    STConfig.O2: (6, [(E, 0, 1), (D2, 1, 2), (E, 3, 4), (E, 4, 5)], ()),
    STConfig.O3: (6, [(E, 0, 1), (D2, 1, 2), (E, 3, 4), (D2, 4, 5)], ((2, 5),)),
    STConfig.O4: (4, [(E, 0, 1), (E, 1, 2), (D2, 2, 3)], ()),
    STConfig.O5: (4, [(E, 0, 1), (E, 0, 2), (E, 0, 3)], ()),
    STConfig.O6: (4, [(E, 0, 1), (E, 1, 3), (D2, 1, 2)], ()),
    STConfig.O7: (4, [(E, 0, 1), (D2, 1, 2), (E, 2, 3)], ()),
}

FRIENDLY = (3, [(E, 0, 1), (LE2, 1, 2)], ())


class _Rel:
    """Relation bitsets restricted to D."""

    def __init__(self, G: Graph, D: int):
        self.D = D
        self.e = {}
        self.d2 = {}
        self.le2 = {}
        for v in bits(D):
            b1 = G.ball(v, 1)
            b2 = G.ball(v, 2)
            self.e[v] = G.adj[v] & D
            self.d2[v] = b2 & ~b1 & D
            self.le2[v] = b2 & D & ~(1 << v)

    def of(self, kind: str, v: int) -> int:
        if kind == E:
            return self.e[v]
        if kind == D2:
            return self.d2[v]
        return self.le2[v]


def _search(rel: _Rel, shape, extra=None) -> tuple[int, ...] | None:
    size, relations, coincide = shape
    back = [[] for _ in range(size)]
    for kind, i, j in relations:
        back[max(i, j)].append((kind, min(i, j)))
    may_equal = [set() for _ in range(size)]
    for i, j in coincide:
        may_equal[max(i, j)].add(min(i, j))
    t: list[int] = []

    def rec(pos: int, used: int) -> bool:
        if pos == size:
            return extra is None or extra(t)
        cand = rel.D
        for kind, j in back[pos]:
            cand &= rel.of(kind, t[j])
        block = used
        for j in may_equal[pos]:
            block &= ~(1 << t[j])
        cand &= ~block
        for v in bits(cand):
            t.append(v)
            if rec(pos + 1, used | (1 << v)):
                return True
            t.pop()
        return False

    if rec(0, 0):
        return tuple(t)
    return None


def find_pattern(G: Graph, D: int, p: Pattern | str) -> tuple[int, ...] | None:
    """First (lexicographic) occurrence of a non-induced P3, P4, K1,3 or 2P3 in D.

    P3/P4 tuples list the path in order; K13 is (centre, leaf, leaf, leaf);
    2P3 is two paths of three, middles at positions 1 and 4.
    """
    if isinstance(p, str):
        p = Pattern(p)
    return _search(_Rel(G, D), SHAPES[p])


def find_friendly_triple(G: Graph, D: int, symmetric: bool = True) -> tuple[int, int, int] | None:
    """Distinct x, y, z in D with xy an edge and d(y, z) <= 2.

    The edge endpoints play symmetric roles, so the first tuple found has
    z close to whichever endpoint is listed second.  With
    ``symmetric=False`` the edge is oriented by index (x < y) and only
    d(y, z) is consulted; that variant exists to measure whether the
    orientation ever matters.
    """
    extra = None if symmetric else (lambda t: t[0] < t[1])
    return _search(_Rel(G, D), FRIENDLY, extra)


def find_st_config(
    G: Graph, D: int, which: STConfig | int | None = None
) -> tuple[STConfig, tuple[int, ...]] | None:
    """Search for O1..O7 (or only ``which``) inside D.

    Dashed relations of the shapes mean distance exactly two in G.  In O3
    positions 2 and 5 (the two far vertices) may be the same vertex.
    """
    rel = _Rel(G, D)
    order = list(STConfig) if which is None else [STConfig(which)]
    for cfg in order:
        w = _search(rel, SHAPES[cfg])
        if w is not None:
            return cfg, w
    return None


def validate_witness(G: Graph, D: int, shape_key, witness: Sequence[int]) -> bool:
    """Re-check a witness tuple against its shape, directly from distances."""
    size, relations, coincide = FRIENDLY if shape_key == "friendly" else SHAPES[shape_key]
    if len(witness) != size or any(not D >> v & 1 for v in witness):
        return False
    for i in range(size):
        for j in range(i + 1, size):
            if witness[i] == witness[j] and (i, j) not in coincide:
                return False
    for kind, i, j in relations:
        d = G.distance(witness[i], witness[j])
        if kind == E and d != 1:
            return False
        if kind == D2 and d != 2:
            return False
        if kind == LE2 and d not in (1, 2):
            return False
    return True


def contains_edge(G: Graph, D: int) -> bool:
    return any(G.adj[v] & D for v in bits(D))
