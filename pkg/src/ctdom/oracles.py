"""Slow, definition-level reference implementations.

Nothing here touches the bitset machinery: graphs are turned into
adjacency sets and every predicate is spelled out from its definition.
The acceptance suites compare the fast code against these.
"""

from __future__ import annotations

import itertools
from collections import deque

from .graph import Graph

INF = float("inf")


def adjacency(G: Graph) -> list[set[int]]:
    adj = [set() for _ in range(G.n)]
    for u, v in G.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def all_distances(adj: list[set[int]]) -> list[list[float]]:
    n = len(adj)
    dist = [[INF] * n for _ in range(n)]
    for s in range(n):
        dist[s][s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[s][w] == INF:
                    dist[s][w] = dist[s][u] + 1
                    queue.append(w)
    return dist


def is_total_dominating(adj, D: set[int]) -> bool:
    return all(adj[v] & D for v in range(len(adj)))


def is_semitotal_dominating(adj, dist, D: set[int]) -> bool:
    for v in range(len(adj)):
        if v not in D and not adj[v] & D:
            return False
    return all(any(y != x and dist[x][y] <= 2 for y in D) for x in D)


def naive_gamma(G: Graph, total: bool) -> int:
    adj = adjacency(G)
    dist = all_distances(adj)
    for k in range(1, G.n + 1):
        for D in itertools.combinations(range(G.n), k):
            S = set(D)
            ok = is_total_dominating(adj, S) if total else is_semitotal_dominating(adj, dist, S)
            if ok:
                return k
    raise ValueError("graph has no dominating set of the requested kind")


# pattern shapes, transcribed from the drawings: vertices are numbered 1..k
# as in the drawings, "solid" pairs are edges of G, "dashed" pairs are at
# distance exactly two, "serpentine" pairs may be the same vertex

DRAWN = {
    "P3": dict(k=3, solid=[(1, 2), (2, 3)]),
    "P4": dict(k=4, solid=[(1, 2), (2, 3), (3, 4)]),
    "K13": dict(k=4, solid=[(1, 2), (1, 3), (1, 4)]),
    "2P3": dict(k=6, solid=[(1, 2), (2, 3), (4, 5), (5, 6)]),
    "O1": dict(k=6, solid=[(2, 3), (5, 6), (1, 2), (4, 5)]),
    "O2": dict(k=6, solid=[(5, 6), (1, 2), (4, 5)], dashed=[(2, 3)]),
    "O3": dict(k=6, solid=[(1, 2), (4, 5)], dashed=[(2, 3), (5, 6)], serpentine=[(3, 6)]),
    "O4": dict(k=4, solid=[(1, 2), (2, 3)], dashed=[(3, 4)]),
    "O5": dict(k=4, solid=[(1, 2), (1, 3), (1, 4)]),
    "O6": dict(k=4, solid=[(1, 2), (2, 4)], dashed=[(2, 3)]),
    "O7": dict(k=4, solid=[(1, 2), (3, 4)], dashed=[(2, 3)]),
}


def naive_find(G: Graph, D: set[int], name: str, dist=None) -> tuple[int, ...] | None:
    """Lexicographically first tuple of D-vertices matching a drawn shape.

    Tuples are grown slot by slot in increasing vertex order and a slot is
    rejected as soon as one of its pairs with earlier slots fails.
    """
    spec = DRAWN[name]
    k = spec["k"]
    dist = dist if dist is not None else all_distances(adjacency(G))
    wanted = {}
    for a, b in spec.get("solid", []):
        wanted[(a, b)] = wanted[(b, a)] = 1
    for a, b in spec.get("dashed", []):
        wanted[(a, b)] = wanted[(b, a)] = 2
    loose = {frozenset(p) for p in spec.get("serpentine", [])}
    order = sorted(D)
    t: list[int] = []

    def fits(v: int) -> bool:
        i = len(t) + 1
        for j, u in enumerate(t, start=1):
            if u == v and frozenset((i, j)) not in loose:
                return False
            need = wanted.get((j, i))
            if need is not None and dist[u][v] != need:
                return False
        return True

    def rec() -> bool:
        if len(t) == k:
            return True
        for v in order:
            if fits(v):
                t.append(v)
                if rec():
                    return True
                t.pop()
        return False

    return tuple(t) if rec() else None


def naive_friendly(G: Graph, D: set[int], dist=None) -> bool:
    """Three distinct members x, y, z with xy an edge and z within distance 2 of x or y."""
    dist = dist if dist is not None else all_distances(adjacency(G))
    for x, y, z in itertools.permutations(sorted(D), 3):
        if dist[x][y] == 1 and min(dist[x][z], dist[y][z]) <= 2:
            return True
    return False


def naive_contains_induced(G: Graph, H: Graph) -> bool:
    """Try every injective map V(H) -> V(G)."""
    if H.n > G.n:
        return False
    gadj, hadj = adjacency(G), adjacency(H)
    for image in itertools.permutations(range(G.n), H.n):
        if all((image[b] in gadj[image[a]]) == (b in hadj[a]) for a in range(H.n) for b in range(a + 1, H.n)):
            return True
    return False


def naive_satisfiable(f) -> bool:
    return any(f.satisfied_by(a) for a in itertools.product((False, True), repeat=f.n_vars))
