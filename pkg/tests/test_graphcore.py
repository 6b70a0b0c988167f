import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathwheel.graphcore import (
    Graph,
    build,
    clique_union,
    complement,
    complete,
    complete_multipartite,
    components,
    cut_vertices,
    cycle,
    degree,
    disjoint_union,
    empty,
    from_graph6,
    induced,
    is_connected,
    is_two_connected,
    min_degree,
    path,
    petersen,
    star,
    to_graph6,
)


@st.composite
def graphs(draw, max_order=10):
    n = draw(st.integers(0, max_order))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (p for p, keep in zip(pairs, mask) if keep))


def test_builder_examples():
    g = clique_union([2, 2])
    assert (g.order, g.size) == (4, 2)
    assert complete_multipartite([3, 3]).size == 9
    with pytest.raises(ValueError):
        cycle(2)


def test_build_dispatch():
    assert build("star", 5) == star(5)
    assert build("clique_union", [3, 1]) == clique_union([3, 1])
    with pytest.raises(ValueError):
        build("wheel", 5)
    with pytest.raises(ValueError):
        build("complete", -1)


def test_named_graphs():
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert star(4).edges() == [(0, 1), (0, 2), (0, 3)]
    assert cycle(4).size == 4
    assert complete(5).size == 10
    assert empty(3).size == 0
    p = petersen()
    assert p.order == 10 and p.size == 15 and all(degree(p, v) == 3 for v in range(10))


def test_invalid_adjacency_rejected():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))  # self-loop
    with pytest.raises(ValueError):
        Graph(2, (0b100, 0))  # out of range


def test_complement_examples():
    assert complement(complete(3)) == empty(3)
    c4 = complement(clique_union([2, 2]))
    assert all(degree(c4, v) == 2 for v in range(4)) and is_connected(c4) and c4.size == 4


@given(graphs())
def test_complement_involution_and_degrees(g):
    h = complement(g)
    assert complement(h) == g
    assert h.order == g.order
    for v in range(g.order):
        assert degree(h, v) == g.order - 1 - degree(g, v)


@given(graphs())
def test_components_partition_vertices(g):
    comps = components(g)
    seen = set()
    for c in comps:
        assert not seen & c
        seen |= c
    assert seen == set(range(g.order))
    if g.order >= 1:
        assert is_connected(g) == (len(comps) == 1)


def test_component_and_connectivity_examples():
    assert len(components(clique_union([2, 2, 2]))) == 3
    assert is_two_connected(cycle(4))
    assert not is_two_connected(path(3))
    assert cut_vertices(path(4)) == {1, 2}
    assert cut_vertices(cycle(5)) == frozenset()
    with pytest.raises(ValueError):
        is_two_connected(complete(2))


def test_min_degree_and_induced():
    assert min_degree(star(5)) == 1
    h = induced(petersen(), range(5))
    assert h == cycle(5)
    with pytest.raises(ValueError):
        min_degree(empty(0))


def test_disjoint_union_numbering():
    g = disjoint_union([complete(2), path(3)])
    assert g.edges() == [(0, 1), (2, 3), (3, 4)]


def test_graph6_examples():
    assert to_graph6(empty(5)) == b"D??"
    assert to_graph6(complete(2)) == b"A_"
    assert from_graph6("A_") == complete(2)
    assert to_graph6(empty(0)) == b"?"
    # networkx-compatible encoding of the Petersen graph
    assert to_graph6(petersen()) == b"IheA@GUAo"


@settings(max_examples=200)
@given(graphs(max_order=20))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph6_round_trip_at_max_order():
    g = cycle(62)
    assert from_graph6(to_graph6(g)) == g
    with pytest.raises(ValueError):
        to_graph6(empty(63))


@pytest.mark.parametrize("bad", [b"", b"D?", b"D???", b"A\x20", b"~??", b"A`"])
def test_graph6_malformed(bad):
    with pytest.raises(ValueError):
        from_graph6(bad)


@settings(max_examples=100)
@given(graphs(max_order=16))
def test_graph6_matches_networkx(g):
    nx = pytest.importorskip("networkx")
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    assert nx.to_graph6_bytes(h, header=False).strip() == to_graph6(g)
