import json

import pytest

from ctdom.errors import CapacityExceeded, DuplicateEdge, IndexOutOfRange, InvalidSpec, NotAnEdge, ParseError, SelfLoop
from ctdom.graph import (
    bits,
    build_graph,
    contract_edge,
    distance,
    four_subdivide,
    graph_from_json,
    induced_subgraph,
    load_graph,
    make_named_graph,
    parse_edge_list,
    random_connected_graph,
    set_distance,
    to_mask,
)


def test_build_path():
    G = build_graph(3, [(0, 1), (1, 2)])
    assert G.n == 3 and G.m == 2
    assert G == make_named_graph("P3")


@pytest.mark.parametrize(
    "n, edges, err",
    [(2, [(0, 0)], SelfLoop), (3, [(0, 1), (1, 0)], DuplicateEdge), (2, [(0, 2)], IndexOutOfRange)],
)
def test_build_rejects(n, edges, err):
    with pytest.raises(err):
        build_graph(n, edges)


def test_capacity():
    with pytest.raises(CapacityExceeded):
        build_graph(257, [])


@pytest.mark.parametrize(
    "name, edge, expect",
    [("C4", (0, 1), "C3"), ("P4", (1, 2), "P3"), ("K4", (2, 3), "K3")],
)
def test_contract_named(name, edge, expect):
    H = contract_edge(make_named_graph(name), *edge)
    assert H == make_named_graph(expect)


def test_contract_reindexing():
    # P5 0-1-2-3-4, contract 1-2: merged vertex keeps slot 1, 3 and 4 shift down
    H = contract_edge(make_named_graph("P5"), 1, 2)
    assert H.n == 4
    assert sorted(H.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_contract_non_edge():
    with pytest.raises(NotAnEdge):
        contract_edge(make_named_graph("P4"), 0, 2)


def test_contract_invariants():
    G = random_connected_graph(9, 0.4, 3)
    for u, v in G.edges():
        H = contract_edge(G, u, v)
        assert H.n == G.n - 1
        for x in range(H.n):
            assert not H.adj[x] >> x & 1
            for y in bits(H.adj[x]):
                assert H.adj[y] >> x & 1


def test_distances():
    P4 = make_named_graph("P4")
    assert distance(P4, 0, 3) == 3
    assert distance(P4, 2, 2) == 0
    assert distance(make_named_graph("2K1"), 0, 1) is None
    assert set_distance(P4, to_mask([0]), to_mask([2, 3])) == 2


def test_distance_properties():
    G = random_connected_graph(10, 0.3, 11)
    for u in range(G.n):
        for v in range(G.n):
            assert (distance(G, u, v) == 1) == G.has_edge(u, v)
            for w in range(G.n):
                assert distance(G, u, w) <= distance(G, u, v) + distance(G, v, w)


def test_induced_subgraph():
    C5 = make_named_graph("C5")
    assert induced_subgraph(C5, to_mask([1, 2, 3])) == make_named_graph("P3")
    assert induced_subgraph(C5, 0).n == 0
    assert induced_subgraph(C5, C5.full) == C5


def test_four_subdivide():
    H, path = four_subdivide(make_named_graph("K2"))
    assert H.n == 6 and H.m == 5
    assert contains_path(H)
    assert path[(0, 1)] == (2, 3, 4, 5)
    G = random_connected_graph(7, 0.5, 1)
    H, _ = four_subdivide(G)
    assert H.n == G.n + 4 * G.m and H.m == 5 * G.m
    assert H.is_connected()
    H, _ = four_subdivide(make_named_graph("K3"))
    assert sorted(H.degree(v) for v in range(H.n)) == [2] * 15 and H.is_connected()


def contains_path(H):
    degrees = sorted(H.degree(v) for v in range(H.n))
    return degrees == [1, 1, 2, 2, 2, 2] and H.is_connected()


def test_named_graphs():
    paw = make_named_graph("paw")
    assert paw.n == 4 and paw.m == 4
    a, b, c, d = (paw.vertex(f"P({i})") for i in range(1, 5))
    assert paw.has_edge(a, b) and paw.has_edge(b, c) and paw.has_edge(a, c) and paw.has_edge(c, d)
    lp = make_named_graph("long paw")
    assert lp.n == 5 and lp.m == 5
    assert lp.has_edge(lp.vertex("P(3)"), lp.vertex("P(4)")) and lp.has_edge(lp.vertex("P(4)"), lp.vertex("P(5)"))
    G = make_named_graph("P4+2P3")
    assert G.n == 10
    assert sorted(c.bit_count() for c in G.components()) == [3, 3, 4]
    assert make_named_graph("K1,3").m == 3
    with pytest.raises(InvalidSpec):
        make_named_graph("Q7")


def test_random_connected_graph():
    assert random_connected_graph(1, 0.5, 0).n == 1
    assert random_connected_graph(5, 1.0, 0) == make_named_graph("K5")
    assert random_connected_graph(8, 0.3, 42) == random_connected_graph(8, 0.3, 42)
    assert random_connected_graph(8, 0.3, 42).is_connected()


def test_edge_list_round_trip(tmp_path):
    G = random_connected_graph(7, 0.4, 5)
    assert parse_edge_list(G.to_edge_list()) == G
    f = tmp_path / "g.txt"
    f.write_text("# comment\n3 2\n0 1\n1 2  # trailing\n")
    assert load_graph(str(f)) == make_named_graph("P3")


def test_json_round_trip(tmp_path):
    G = make_named_graph("paw")
    H = graph_from_json(json.dumps(G.to_json()))
    assert H == G and H.labels == G.labels
    f = tmp_path / "g.json"
    f.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2]]}))
    assert load_graph(str(f)) == make_named_graph("P3")


@pytest.mark.parametrize("text", ["", "3\n", "3 2\n0 1\n", "2 1\n0 x\n", "3 1\n0 1 2\n"])
def test_edge_list_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_json_errors():
    with pytest.raises(ParseError):
        graph_from_json("{not json")
    with pytest.raises(ParseError):
        graph_from_json({"edges": []})


def test_label_vertex_inverse():
    paw = make_named_graph("paw")
    P4 = make_named_graph("P4")
    for G in (paw, P4):
        for v in range(G.n):
            assert G.vertex(G.label(v)) == v
    with pytest.raises(IndexOutOfRange):
        P4.vertex("9")
    with pytest.raises(IndexOutOfRange):
        paw.vertex("0")
