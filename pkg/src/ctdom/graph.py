"""Immutable simple graphs with bitset adjacency.

Vertex sets are plain Python ints used as bitsets: bit ``i`` set means
vertex ``i`` is a member.
"""

from __future__ import annotations

import json
import random
import re
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    CapacityExceeded,
    DuplicateEdge,
    GiveUp,
    GraphError,
    IndexOutOfRange,
    InvalidSpec,
    NotAnEdge,
    ParseError,
    SelfLoop,
)

CAPACITY = 256
MAX_RESAMPLES = 10_000

VertexSet = int
Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a bitset in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    Instances are values: nothing mutates them after construction, so
    cached distance data is safe to share.
    """

    __slots__ = ("n", "adj", "labels", "_balls", "_index")

    def __init__(self, n: int, adj: Sequence[int], labels: Mapping[int, str] | None = None):
        if n > CAPACITY:
            raise CapacityExceeded(f"{n} vertices exceeds capacity {CAPACITY}")
        self.n = n
        self.adj = tuple(adj)
        lab = dict(labels) if labels else {}
        for i in lab:
            if not 0 <= i < n:
                raise IndexOutOfRange(f"label index {i} out of range")
        if len(set(lab.values())) != len(lab):
            raise GraphError("vertex labels must be unique")
        self.labels = lab
        self._balls = None
        self._index = None

    # basic queries

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def neighborhood(self, S: int) -> int:
        """Open neighbourhood of a vertex set (union of N(v), v in S)."""
        out = 0
        for v in bits(S):
            out |= self.adj[v]
        return out

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def fingerprint(self) -> tuple[int, ...]:
        return self.adj

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def vertex(self, label: str) -> int:
        """Index of the vertex carrying ``label``; the inverse of ``label``."""
        if self._index is None:
            self._index = {s: i for i, s in self.labels.items()}
        if label in self._index:
            return self._index[label]
        if label.isdigit() and int(label) < self.n and int(label) not in self.labels:
            return int(label)
        raise IndexOutOfRange(f"no vertex labelled {label!r}")

    def vset(self, *labels: str) -> int:
        return to_mask(self.vertex(s) for s in labels)

    # distances

    def balls(self) -> tuple[tuple[int, ...], ...]:
        """``balls()[v][r]`` is the set of vertices at distance <= r from v.

        The tuple for v stops once the ball stops growing.
        """
        if self._balls is None:
            out = []
            for v in range(self.n):
                layers = [1 << v]
                cur = 1 << v
                while True:
                    nxt = cur | self.neighborhood(cur)
                    if nxt == cur:
                        break
                    layers.append(nxt)
                    cur = nxt
                out.append(tuple(layers))
            self._balls = tuple(out)
        return self._balls

    def ball(self, v: int, r: int) -> int:
        layers = self.balls()[v]
        return layers[min(r, len(layers) - 1)]

    def distance(self, u: int, v: int) -> int | None:
        """Shortest-path length, or None when v is unreachable from u."""
        for r, layer in enumerate(self.balls()[u]):
            if layer >> v & 1:
                return r
        return None

    def set_distance(self, A: int, B: int) -> int | None:
        best = None
        for a in bits(A):
            for r, layer in enumerate(self.balls()[a]):
                if layer & B:
                    if best is None or r < best:
                        best = r
                    break
        return best

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.balls()[0][-1] == self.full

    def components(self) -> list[int]:
        seen = 0
        out = []
        for v in range(self.n):
            if not seen >> v & 1:
                comp = self.balls()[v][-1]
                out.append(comp)
                seen |= comp
        return out

    # export

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges()],
            "labels": {str(k): v for k, v in sorted(self.labels.items())},
        }

    def to_edge_list(self) -> str:
        es = self.edges()
        lines = [f"{self.n} {len(es)}"] + [f"{u} {v}" for u, v in es]
        return "\n".join(lines) + "\n"


def build_graph(n: int, edges: Iterable[Sequence[int]], labels: Mapping[int, str] | None = None) -> Graph:
    """Build a simple graph, rejecting loops, repeated pairs and bad indices."""
    if n < 0:
        raise IndexOutOfRange("negative vertex count")
    if n > CAPACITY:
        raise CapacityExceeded(f"{n} vertices exceeds capacity {CAPACITY}")
    adj = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(u)
        if adj[u] >> v & 1:
            raise DuplicateEdge(u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, labels)


def _remap(mask: int, a: int, b: int) -> int:
    """Apply the contraction reindexing (b -> a, indices above b shift down)."""
    low = mask & ((1 << b) - 1)
    res = low | ((mask >> (b + 1)) << b)
    if mask >> b & 1:
        res |= 1 << a
    return res


def contract_edge(G: Graph, u: int, v: int) -> Graph:
    """Contract edge uv. The merged vertex takes slot min(u, v)."""
    if not (0 <= u < G.n and 0 <= v < G.n) or u == v or not G.has_edge(u, v):
        raise NotAnEdge(f"({u},{v}) is not an edge")
    a, b = min(u, v), max(u, v)
    adj = []
    for w in range(G.n):
        if w == b:
            continue
        if w == a:
            adj.append(_remap(G.adj[a] | G.adj[b], a, b) & ~(1 << a))
        else:
            adj.append(_remap(G.adj[w], a, b))
    labels = None
    if G.labels:
        labels = {}
        for w, s in G.labels.items():
            if w == b:
                continue
            nw = w if w < b else w - 1
            labels[nw] = s
        if a in G.labels and b in G.labels:
            labels[a] = G.labels[a] + "/" + G.labels[b]
        else:
            labels.pop(a, None)
    return Graph(G.n - 1, adj, labels)


def distance(G: Graph, u: int, v: int) -> int | None:
    return G.distance(u, v)


def set_distance(G: Graph, A: int, B: int) -> int | None:
    return G.set_distance(A, B)


def induced_subgraph(G: Graph, S: int) -> Graph:
    """G[S], reindexed 0..|S|-1 in increasing order of original index."""
    order = list(bits(S))
    pos = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        adj.append(to_mask(pos[w] for w in bits(G.adj[v] & S)))
    labels = {pos[v]: s for v, s in G.labels.items() if v in pos}
    return Graph(len(order), adj, labels)


def four_subdivide(G: Graph) -> tuple[Graph, dict[Edge, tuple[int, int, int, int]]]:
    """Replace every edge uv (u < v) by a path u, e1, e2, e3, e4, v."""
    edges = G.edges()
    n = G.n
    new_edges = []
    path = {}
    labels = dict(G.labels)
    for i, (u, v) in enumerate(edges):
        e = tuple(n + 4 * i + j for j in range(4))
        path[(u, v)] = e
        chain = (u,) + e + (v,)
        new_edges.extend(zip(chain, chain[1:]))
        if G.labels:
            for j, x in enumerate(e):
                labels[x] = f"{G.label(u)}-{G.label(v)}:e{j + 1}"
    H = build_graph(n + 4 * len(edges), new_edges, labels or None)
    return H, path


# named graphs

_TERM = re.compile(r"^(\d*)\s*(?:\((.+)\)|(.+))$")


def _single(name: str) -> tuple[int, list[Edge], dict[int, str]]:
    s = name.replace("_", "").replace("{", "").replace("}", "").replace(" ", "").lower()
    if s == "paw":
        return 4, [(0, 1), (0, 2), (1, 2), (2, 3)], {i: f"P({i + 1})" for i in range(4)}
    if s in ("longpaw", "long-paw"):
        return 5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)], {i: f"P({i + 1})" for i in range(5)}
    m = re.fullmatch(r"k1,(\d+)", s)
    if m:
        k = int(m.group(1))
        return k + 1, [(0, i) for i in range(1, k + 1)], {}
    m = re.fullmatch(r"([pck])(\d+)", s)
    if not m:
        raise InvalidSpec(f"unknown graph family {name!r}")
    fam, k = m.group(1), int(m.group(2))
    if k < 1:
        raise InvalidSpec(f"{name!r}: size must be positive")
    if fam == "p":
        return k, [(i, i + 1) for i in range(k - 1)], {}
    if fam == "k":
        return k, [(i, j) for i in range(k) for j in range(i + 1, k)], {}
    if k < 3:
        raise InvalidSpec(f"{name!r}: cycles need at least 3 vertices")
    return k, [(i, (i + 1) % k) for i in range(k)], {}


def make_named_graph(spec: str) -> Graph:
    """Build P_n, C_n, K_n, K_{1,n}, paw, long paw, or sums like ``P4+2P3``.

    Components appear in the order written.  Paw vertices are labelled
    ``P(1)..P(4)`` (triangle 1,2,3 and pendant 4 on 3); long-paw vertices
    ``P(1)..P(5)`` (triangle 1,2,3 and path 3-4-5).
    """
    if not spec or not spec.strip():
        raise InvalidSpec("empty graph descriptor")
    n = 0
    edges: list[Edge] = []
    labels: dict[int, str] = {}
    parts = [p.strip() for p in spec.split("+")]
    multi = len(parts) > 1
    for part in parts:
        m = _TERM.match(part)
        if not m or not part:
            raise InvalidSpec(f"bad term {part!r}")
        count = int(m.group(1)) if m.group(1) else 1
        name = m.group(2) or m.group(3)
        if count == 0:
            continue
        k, es, lab = _single(name)
        for c in range(count):
            edges.extend((u + n, v + n) for u, v in es)
            if lab and not multi and count == 1:
                labels.update({u + n: s for u, s in lab.items()})
            n += k
    if n > CAPACITY:
        raise CapacityExceeded(f"{spec}: {n} vertices exceeds capacity")
    return build_graph(n, edges, labels or None)


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), resampled until connected.

    Raises GiveUp after MAX_RESAMPLES attempts.
    """
    if n < 1:
        raise InvalidSpec("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise InvalidSpec("p must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(MAX_RESAMPLES):
        G = build_graph(n, [e for e in pairs if rng.random() < p])
        if G.is_connected():
            return G
    raise GiveUp(f"no connected sample for n={n}, p={p} after {MAX_RESAMPLES} tries")


# text formats


def parse_edge_list(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ParseError("empty graph file")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise ParseError(f"non-integer token: {exc}") from None
    if len(header) != 2:
        raise ParseError("header must be 'n m'")
    n, m = header
    if any(len(r) != 2 for r in body):
        raise ParseError("edge lines must have exactly two vertices")
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    return build_graph(n, body)


def graph_from_json(data: dict | str) -> Graph:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from None
    try:
        labels = {int(k): str(v) for k, v in (data.get("labels") or {}).items()}
        return build_graph(int(data["n"]), data["edges"], labels or None)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from None


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    return parse_edge_list(text)
