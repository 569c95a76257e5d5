"""
Unit tests for graph module.
"""
from src.errors import GraphError
from src.graph import (Graph, canonical_edge, complete_bipartite_graph, complete_graph,
                       cycle_graph, path_graph, petersen_graph)
import pytest
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def test_canonical_edges():
    """Test that edges are stored sorted with u < v."""
    G = Graph(3, ((2, 1), (1, 0)))
    assert G.edges == ((0, 1), (1, 2))
    assert canonical_edge(4, 2) == (2, 4)
    assert G.has_edge(1, 0) and G.has_edge(2, 1)
    assert not G.has_edge(0, 2)
    assert G.edge_index(2, 1) == 1

    # Same edge set, same graph
    assert G == Graph(3, ((0, 1), (1, 2)))

    print("✓ test_canonical_edges passed")


def test_invalid_graphs():
    """Test that self-loops, parallel edges and bad indices are rejected."""
    with pytest.raises(GraphError):
        Graph(2, ((0, 0),))
    with pytest.raises(GraphError):
        Graph(2, ((0, 1), (1, 0)))
    with pytest.raises(GraphError):
        Graph(2, ((0, 2),))
    with pytest.raises(GraphError):
        Graph(0)
    with pytest.raises(GraphError):
        Graph(3, ((0, 1),)).edge_index(0, 2)

    print("✓ test_invalid_graphs passed")


def test_degrees():
    """Test degrees and the handshake identity."""
    G = petersen_graph()
    assert G.n == 10 and G.e == 15
    assert set(G.degrees()) == {3}
    assert sum(G.degrees()) == 2 * G.e

    P = path_graph(4)
    assert P.degrees() == [1, 2, 2, 1]
    assert P.min_degree == 1
    assert P.max_degree == 2
    assert P.neighbours(1) == (0, 2)

    print("✓ test_degrees passed")


def test_families():
    """Test the named graph families."""
    K = complete_graph(5)
    assert K.e == 10
    assert K.is_complete()

    C = cycle_graph(6)
    assert C.e == 6
    assert C.degrees() == [2] * 6
    with pytest.raises(GraphError):
        cycle_graph(2)

    B = complete_bipartite_graph(2, 3)
    assert B.n == 5 and B.e == 6
    assert B.neighbours(0) == (2, 3, 4)
    assert B.neighbours(4) == (0, 1)

    print("✓ test_families passed")


def test_subgraphs_and_relabel():
    """Test spanning subgraphs, edge addition and vertex relabelling."""
    K = complete_graph(4)
    H = K.spanning_subgraph([(1, 0), (2, 1), (3, 2), (3, 0)])
    assert H.n == 4 and H.e == 4
    with pytest.raises(GraphError):
        cycle_graph(4).spanning_subgraph([(0, 2)])

    G = path_graph(3).with_edge(0, 2)
    assert G == cycle_graph(3)
    assert path_graph(3).complement_pairs() == [(0, 2)]

    R = path_graph(3).relabel([2, 0, 1])
    assert R.edges == ((0, 1), (0, 2))
    with pytest.raises(GraphError):
        path_graph(3).relabel([0, 0, 1])

    print("✓ test_subgraphs_and_relabel passed")


def test_networkx_round_trip():
    """Test conversion to and from networkx."""
    G = petersen_graph()
    assert Graph.from_networkx(G.to_networkx()) == G
    assert G.to_networkx().number_of_nodes() == 10

    print("✓ test_networkx_round_trip passed")


if __name__ == "__main__":
    test_canonical_edges()
    test_invalid_graphs()
    test_degrees()
    test_families()
    test_subgraphs_and_relabel()
    test_networkx_round_trip()
    print("\n✓ All graph tests passed!")
