import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_2_connected
from pathham.enumerate import enumerate_graphs
from pathham.graph import (
    Graph,
    canonical_cycle,
    canonical_path,
    complete_graph,
    cycle_graph,
    degree,
    empty_graph,
    is_2_connected,
    is_connected,
    is_cut_set,
    is_k_regular,
    members,
    path_graph,
    petersen,
    remove_vertices,
    vset,
)
from pathham.verify import sharpness_construct


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def k4_minus_edge():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def test_degree():
    assert degree(complete_graph(4), 0) == 3
    assert degree(empty_graph(1), 0) == 0
    p = petersen()
    assert [degree(p, v) for v in range(10)] == [3] * 10
    with pytest.raises(ValueError):
        degree(complete_graph(4), 4)


def test_is_k_regular():
    assert is_k_regular(complete_graph(4), 3)
    assert not is_k_regular(k4_minus_edge(), 3)
    assert is_k_regular(sharpness_construct(3).graph, 3)


def test_is_connected():
    assert is_connected(complete_graph(4))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(empty_graph(1))


def test_is_2_connected():
    assert is_2_connected(cycle_graph(5))
    assert not is_2_connected(path_graph(4))
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert not is_2_connected(bowtie)
    assert not is_2_connected(complete_graph(2))


def test_is_cut_set():
    assert not is_cut_set(complete_graph(4), {0, 1})
    assert is_cut_set(path_graph(4), {1})
    sg = sharpness_construct(3)
    lab = sg.labels
    assert not is_cut_set(sg.graph, {lab["c1"], lab["a1"], lab["d1"]})
    # one survivor counts as connected
    assert not is_cut_set(complete_graph(4), {0, 1, 2})
    with pytest.raises(ValueError):
        is_cut_set(complete_graph(3), {0, 1, 2})


def test_remove_vertices():
    h, relabel = remove_vertices(complete_graph(4), {0})
    assert h == complete_graph(3)
    assert relabel == {1: 0, 2: 1, 3: 2}
    h, _ = remove_vertices(cycle_graph(5), {0})
    assert h == path_graph(4)
    h, relabel = remove_vertices(cycle_graph(5), set())
    assert h == cycle_graph(5)
    assert relabel == {i: i for i in range(5)}


def test_invalid_graphs_rejected():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (1,))  # loop
    with pytest.raises(ValueError):
        Graph(2, (0b110, 0b1))  # bit beyond n
    with pytest.raises(ValueError):
        Graph.from_edges(65, [])


def test_canonical_path_and_cycle():
    assert canonical_path((3, 1, 0)) == (0, 1, 3)
    assert canonical_path((0, 2, 1)) == (0, 2, 1)
    assert canonical_cycle((2, 3, 0, 1)) == (0, 1, 2, 3)
    assert canonical_cycle((3, 2, 1, 0)) == (0, 1, 2, 3)


def test_two_connectivity_matches_brute_force_up_to_8():
    for n in range(1, 9):
        for g in enumerate_graphs(n):
            assert is_2_connected(g) == brute_2_connected(g), g


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_cut_set_equals_disconnected_remainder(g):
    for s in range(1, 1 << g.n, max(1, (1 << g.n) // 50)):
        if s == g.full:
            continue
        h, _ = remove_vertices(g, s)
        assert is_cut_set(g, s) == (not is_connected(h))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_handshake_and_symmetry(g):
    assert sum(degree(g, v) for v in range(g.n)) == 2 * g.num_edges()
    for i in range(g.n):
        assert not g.adj[i] >> i & 1
        for j in members(g.adj[i]):
            assert g.adj[j] >> i & 1
    assert vset(members(g.full)) == g.full
