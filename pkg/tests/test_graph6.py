import pytest
from hypothesis import given, settings

from oracles import naive_decode_graph6, naive_encode_graph6
from pathham.enumerate import enumerate_regular_graphs
from pathham.graph import Graph, complete_graph, empty_graph
from pathham.graph6 import (
    Graph6Error,
    emit_graph6,
    iter_graph6_lines,
    parse_graph6,
    read_graph6_file,
)
from test_graph import graphs


def test_d_question_brace():
    g = parse_graph6("D?{")
    n, edges = naive_decode_graph6("D?{")
    assert (g.n, set(g.edges())) == (n, edges)
    assert g.n == 5 and g.num_edges() == 4


def test_single_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and g.num_edges() == 0
    assert emit_graph6(g) == b"@"


def test_known_encodings():
    assert emit_graph6(complete_graph(3)) == b"Bw"
    assert naive_encode_graph6(3, [(0, 1), (0, 2), (1, 2)]) == "Bw"
    assert emit_graph6(empty_graph(2)) == b"A?"
    assert naive_encode_graph6(2, []) == "A?"


def test_cubic_six_round_trip():
    for g in enumerate_regular_graphs(3, 6):
        line = emit_graph6(g)
        assert parse_graph6(line) == g
        assert emit_graph6(parse_graph6(line)) == line


def test_large_size_prefix():
    for n in (62, 63, 64):
        g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
        line = emit_graph6(g)
        assert (line[0] == 126) == (n > 62)
        assert parse_graph6(line) == g


@pytest.mark.parametrize("line, fragment", [
    ("", "empty"),
    ("D?{ ", "outside"),
    ("D?", "truncated"),
    ("D?{?", "trailing"),
    ("D?|", "padding"),
    ("~?A?", "exceeds"),
    ("~~??????", "exceeds"),
    ("~?", "truncated size"),
    ("?", "zero vertices"),
])
def test_malformed(line, fragment):
    with pytest.raises(Graph6Error, match=fragment):
        parse_graph6(line)


def test_header_crlf_and_blank_lines(tmp_path):
    f = tmp_path / "g.g6"
    f.write_bytes(b">>graph6<<\r\nBw\r\n\r\nD?{\n")
    graphs_ = read_graph6_file(f)
    assert [g.n for g in graphs_] == [3, 5]
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)


def test_batch_aborts_with_line_number():
    with pytest.raises(Graph6Error) as info:
        list(iter_graph6_lines(["Bw", "", "D?|"]))
    assert info.value.lineno == 3
    assert "line 3" in str(info.value)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=20))
def test_round_trip_and_edge_count(g):
    line = emit_graph6(g)
    assert parse_graph6(line) == g
    assert emit_graph6(parse_graph6(line)) == line
    n, edges = naive_decode_graph6(line.decode())
    assert n == g.n and edges == set(g.edges())
    assert len(edges) == g.num_edges()
