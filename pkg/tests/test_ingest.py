"""
Unit tests for ingest module.
"""
from src.colouring import EdgeColouring
from src.errors import ColouringError, ParseError
from src.graph import complete_graph, cycle_graph, path_graph, petersen_graph
from src.ingest import (GraphFormat, parse_colouring, parse_graph, read_colouring, read_graph,
                        serialize_colouring, serialize_graph, sniff_format, write_colouring)
import networkx as nx
import pytest
import tempfile
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def test_parse_edge_list():
    """Test edge-list parsing."""
    G = parse_graph("3\n0 1\n1 2\n", GraphFormat.EDGE_LIST)
    assert G == path_graph(3)
    assert G.e == 2

    # Blank lines and extra spaces are fine
    G = parse_graph("\n4\n  0   3\n\n1 2\n", GraphFormat.EDGE_LIST)
    assert G.edges == ((0, 3), (1, 2))

    print("✓ test_parse_edge_list passed")


def test_edge_list_errors():
    """Test that malformed edge lists report the byte offset."""
    with pytest.raises(ParseError, match="Self-loop") as info:
        parse_graph("2\n0 0\n", GraphFormat.EDGE_LIST)
    assert info.value.offset == 2

    with pytest.raises(ParseError, match="Duplicate") as info:
        parse_graph("3\n0 1\n1 0\n", GraphFormat.EDGE_LIST)
    assert info.value.offset == 6

    with pytest.raises(ParseError, match="out of range") as info:
        parse_graph("3\n0 3\n", GraphFormat.EDGE_LIST)
    assert info.value.offset == 4

    with pytest.raises(ParseError, match="header") as info:
        parse_graph("x\n0 1\n", GraphFormat.EDGE_LIST)
    assert info.value.offset == 0

    with pytest.raises(ParseError, match="Invalid vertex") as info:
        parse_graph("3\n0 \u00b2\n", GraphFormat.EDGE_LIST)
    assert info.value.offset == 4
    with pytest.raises(ParseError, match="header") as info:
        parse_graph("\u00b2\n0 1\n", GraphFormat.EDGE_LIST)
    assert info.value.offset == 0
    with pytest.raises(ParseError, match="Invalid vertex") as info:
        parse_graph("3\n\u0661 2\n", GraphFormat.EDGE_LIST)
    assert info.value.offset == 2

    with pytest.raises(ParseError):
        parse_graph("3\n0 1 2\n", GraphFormat.EDGE_LIST)
    with pytest.raises(ParseError):
        parse_graph("", GraphFormat.EDGE_LIST)

    print("✓ test_edge_list_errors passed")


def test_graph6():
    """Test graph6 against the networkx encoder."""
    K5 = nx.to_graph6_bytes(nx.complete_graph(5), header=False).decode().strip()
    assert K5 == "D~{"
    G = parse_graph(K5, GraphFormat.GRAPH6)
    assert G.n == 5 and G.e == 10

    P = petersen_graph()
    expected = nx.to_graph6_bytes(nx.petersen_graph(), header=False).decode()
    assert serialize_graph(P, GraphFormat.GRAPH6) == expected
    assert parse_graph(">>graph6<<" + expected, GraphFormat.GRAPH6) == P

    print("✓ test_graph6 passed")


def test_graph6_errors():
    """Test graph6 rejection of short bodies, large headers and bad bytes."""
    with pytest.raises(ParseError):
        parse_graph("D~", GraphFormat.GRAPH6)
    with pytest.raises(ParseError, match="n >= 63"):
        parse_graph("~?@?", GraphFormat.GRAPH6)
    with pytest.raises(ParseError):
        parse_graph("D~\x7f", GraphFormat.GRAPH6)
    with pytest.raises(ParseError, match="padding"):
        parse_graph("D~~", GraphFormat.GRAPH6)

    print("✓ test_graph6_errors passed")


def test_round_trip():
    """Test parse(serialize(G)) == G for both formats."""
    for G in (petersen_graph(), cycle_graph(7), complete_graph(1), path_graph(2)):
        for fmt in (GraphFormat.GRAPH6, GraphFormat.EDGE_LIST):
            assert parse_graph(serialize_graph(G, fmt), fmt) == G

    assert serialize_graph(path_graph(3), GraphFormat.EDGE_LIST) == "3\n0 1\n1 2\n"

    print("✓ test_round_trip passed")


def test_format_flags():
    """Test CLI spellings and format sniffing."""
    assert GraphFormat.from_flag('g6') is GraphFormat.GRAPH6
    assert GraphFormat.from_flag('edges') is GraphFormat.EDGE_LIST
    with pytest.raises(ValueError):
        GraphFormat.from_flag('dot')

    assert sniff_format("D~{\n") is GraphFormat.GRAPH6
    assert sniff_format("3\n0 1\n") is GraphFormat.EDGE_LIST

    print("✓ test_format_flags passed")


def test_parse_colouring():
    """Test colouring CSV parsing and label compaction."""
    P = path_graph(3)
    phi = parse_colouring("u,v,colour\n0,1,5\n2,1,9\n", P)
    assert phi.labels == (1, 2)

    with pytest.raises(ColouringError):
        parse_colouring("u,v,colour\n0,1,1\n", P)
    with pytest.raises(ColouringError):
        parse_colouring("u,v,colour\n0,1,1\n1,2,1\n0,2,1\n", P)
    with pytest.raises(ParseError) as info:
        parse_colouring("a,b,c\n0,1,1\n", P)
    assert info.value.offset == 0
    with pytest.raises(ParseError) as info:
        parse_colouring("u,v,colour\n0,x,1\n1,2,1\n", P)
    assert info.value.offset == 11

    text = serialize_colouring(EdgeColouring(P, (1, 2)))
    assert text == "u,v,colour\n0,1,1\n1,2,2\n"
    assert parse_colouring(text, P).labels == (1, 2)

    print("✓ test_parse_colouring passed")


def test_files():
    """Test file readers and writers."""
    with tempfile.TemporaryDirectory() as folder:
        graph_path = os.path.join(folder, "k5.g6")
        with open(graph_path, 'w', encoding='utf-8') as f:
            f.write("D~{\n")
        G = read_graph(graph_path)
        assert G == complete_graph(5)

        colouring_path = os.path.join(folder, "out", "mono.csv")
        write_colouring(EdgeColouring.monochromatic(G), colouring_path)
        phi = read_colouring(colouring_path, G)
        assert phi.r == 1

    print("✓ test_files passed")


if __name__ == "__main__":
    test_parse_edge_list()
    test_edge_list_errors()
    test_graph6()
    test_graph6_errors()
    test_round_trip()
    test_format_flags()
    test_parse_colouring()
    test_files()
    print("\n✓ All ingest tests passed!")
