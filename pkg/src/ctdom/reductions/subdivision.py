"""Moving total dominating sets between G and its 4-subdivision H.

Every edge uv (u < v) of G becomes the path u, e1, e2, e3, e4, v in H,
as produced by ``four_subdivide``.
"""

from __future__ import annotations

from ..domination import DomKind, is_dom_set
from ..errors import InvalidInput, TheoryViolation
from ..graph import Edge, Graph, bits

PathMap = dict[Edge, tuple[int, int, int, int]]


def _check_shape(G: Graph, H: Graph, path: PathMap):
    if H.n != G.n + 4 * G.m or set(path) != set(G.edges()):
        raise InvalidInput("H is not the 4-subdivision of G")


def td_transform_up(G: Graph, H: Graph, path: PathMap, D: int) -> int:
    """A TD set of H of size |D| + 2|E(G)| built from a TD set D of G.

    Per edge: neither end in D adds e2, e3; both ends add e1, e4; one end
    adds the two path vertices nearest the other end.
    """
    _check_shape(G, H, path)
    if not is_dom_set(G, D, DomKind.TOTAL):
        raise InvalidInput("D is not a total dominating set of G")
    out = D
    for (u, v), (e1, e2, e3, e4) in path.items():
        inu, inv = D >> u & 1, D >> v & 1
        if inu and inv:
            add = (e1, e4)
        elif inu:
            add = (e3, e4)
        elif inv:
            add = (e1, e2)
        else:
            add = (e2, e3)
        for x in add:
            out |= 1 << x
    return out


def td_transform_down(G: Graph, H: Graph, path: PathMap, D: int) -> int:
    """A TD set of G of size at most |D| - 2|E(G)| built from a TD set D of H.

    Keeps D ∩ V(G) and, for every edge uv, adds v when e1 ∈ D and u when
    e4 ∈ D.  The same vertices result whichever order the edges are
    processed in.
    """
    _check_shape(G, H, path)
    if not is_dom_set(H, D, DomKind.TOTAL):
        raise InvalidInput("D is not a total dominating set of H")
    out = D & G.full
    for (u, v), (e1, _, _, e4) in path.items():
        if D >> e1 & 1:
            out |= 1 << v
        if D >> e4 & 1:
            out |= 1 << u
    for (u, v), (e1, _, _, e4) in path.items():
        if (D >> e1 & 1 and not out >> v & 1) or (D >> e4 & 1 and not out >> u & 1):
            raise TheoryViolation(f"edge {u}-{v}: an end next to a chosen path vertex was not kept")
    if out.bit_count() > D.bit_count() - 2 * G.m:
        raise TheoryViolation(f"result has {out.bit_count()} vertices, more than |D| - 2m")
    if not is_dom_set(G, out, DomKind.TOTAL):
        raise TheoryViolation(f"result {sorted(bits(out))} is not a total dominating set of G")
    return out
