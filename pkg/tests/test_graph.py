import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphgen import random_graph
from sw_forge import (
    IndexOutOfRangeError,
    LoopEdgeError,
    MalformedGraph6Error,
    NestedStarSpec,
    TooLargeError,
    build,
    encode_graph6,
    from_edge_list,
    is_connected,
    parse_edge_list,
    parse_graph6,
    to_dot,
    to_edge_list,
)


def test_path_construction():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


def test_single_vertex():
    g = from_edge_list(1, [])
    assert g.n == 1
    assert g.edges() == []


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count() == 1


def test_loop_edge_rejected():
    with pytest.raises(LoopEdgeError):
        from_edge_list(3, [(0, 0)])


def test_endpoint_out_of_range():
    with pytest.raises(IndexOutOfRangeError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(IndexOutOfRangeError):
        from_edge_list(3, [(-1, 2)])


def test_too_many_vertices():
    with pytest.raises(TooLargeError):
        from_edge_list(63, [])


def test_edge_order_insensitive():
    edges = [(0, 1), (1, 2), (0, 3), (2, 3)]
    g1 = from_edge_list(4, edges)
    g2 = from_edge_list(4, list(reversed(edges)))
    assert g1 == g2


def test_connectivity_basics():
    assert is_connected(from_edge_list(4, [(0, 1), (1, 2), (2, 3)]))
    assert not is_connected(from_edge_list(2, []))
    assert is_connected(from_edge_list(1, []))
    # vertex 11 of the hubs-(3,8) nested star is adjacent to everything
    assert is_connected(build(NestedStarSpec(12, (3, 8))))


def test_connectivity_against_union_find():
    rng = random.Random(20240)
    for _ in range(1000):
        n = rng.randint(1, 16)
        g = random_graph(rng, n)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in g.edges():
            parent[find(u)] = find(v)
        assert is_connected(g) == (len({find(v) for v in range(n)}) == 1)


# graph6 reference values, worked out from the format definition
def test_parse_graph6_known():
    k2 = parse_graph6("A_")
    assert (k2.n, k2.edges()) == (2, [(0, 1)])
    k4 = parse_graph6("C~")
    assert (k4.n, k4.edge_count()) == (4, 6)
    p3 = parse_graph6("Bg")
    assert (p3.n, p3.edges()) == (3, [(0, 1), (1, 2)])


def test_encode_graph6_known():
    assert encode_graph6(from_edge_list(2, [(0, 1)])) == "A_"
    assert encode_graph6(from_edge_list(1, [])) == "@"


def test_graph6_malformed():
    with pytest.raises(MalformedGraph6Error):
        parse_graph6("")
    with pytest.raises(MalformedGraph6Error):
        parse_graph6("A")  # missing bit character
    with pytest.raises(MalformedGraph6Error):
        parse_graph6("A_%")  # wrong length
    with pytest.raises(MalformedGraph6Error):
        parse_graph6("B" + chr(50))  # character below 63
    with pytest.raises(MalformedGraph6Error):
        parse_graph6("A" + chr(63 + 48))  # nonzero padding bits


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 62), st.randoms(use_true_random=False))
def test_graph6_round_trip(n, rnd):
    g = random_graph(rnd, n)
    assert parse_graph6(encode_graph6(g)) == g


def test_edge_list_text_round_trip():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    text = to_edge_list(g)
    assert text.splitlines()[0] == "4 3"
    assert parse_edge_list(text) == g


def test_dot_output():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    dot = to_dot(g)
    assert dot.startswith("graph")
    assert dot.count(" -- ") == 3
    for v in range(4):
        assert f"{v};" in dot
