"""
Unit tests for connectivity module.
"""
from src.config import SearchBudget
from src.connectivity import (chromatic_number, enumerate_min_spanning_k_connected,
                              greedy_minimal_subgraph, is_k_connected, local_connectivity,
                              max_flow_value, min_spanning_k_connected,
                              subgraph_edge_lower_bound, vertex_connectivity)
from src.errors import BudgetExceededError, NotKConnectedError, PreconditionError
from src.graph import (Graph, complete_bipartite_graph, complete_graph, cycle_graph,
                       path_graph, petersen_graph)
import networkx as nx
import pytest
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def test_max_flow_value():
    """Test the flow kernel on a small network with parallel arcs."""
    arcs = [('source', 'a', 1), ('source', 'a', 1), ('a', 'sink', 3), ('source', 'sink', 1)]
    assert max_flow_value(arcs) == 3
    assert max_flow_value([]) == 0

    print("✓ test_max_flow_value passed")


def test_local_connectivity():
    """Test internally disjoint path counts, direct edge included."""
    K4 = complete_graph(4)
    assert local_connectivity(K4.edges, 0, 1) == 3
    C6 = cycle_graph(6)
    assert local_connectivity(C6.edges, 0, 3) == 2
    assert local_connectivity(C6.edges, 0, 1) == 2
    with pytest.raises(PreconditionError):
        local_connectivity(K4.edges, 2, 2)

    print("✓ test_local_connectivity passed")


def test_vertex_connectivity():
    """Test vertex connectivity against known values and networkx."""
    assert vertex_connectivity(complete_graph(5)) == 4
    assert vertex_connectivity(cycle_graph(6)) == 2
    assert vertex_connectivity(petersen_graph()) == 3
    assert vertex_connectivity(path_graph(4)) == 1
    assert vertex_connectivity(Graph(4, ((0, 1), (2, 3)))) == 0
    assert vertex_connectivity(complete_bipartite_graph(3, 4)) == 3

    G = Graph.from_networkx(nx.wheel_graph(7))
    assert vertex_connectivity(G) == nx.node_connectivity(G.to_networkx())

    with pytest.raises(PreconditionError):
        vertex_connectivity(Graph(1))

    print("✓ test_vertex_connectivity passed")


def test_is_k_connected():
    """Test the k-connectivity predicate."""
    assert is_k_connected(complete_graph(4), 3)
    assert not is_k_connected(complete_graph(4), 4)
    assert not is_k_connected(cycle_graph(5), 3)
    assert is_k_connected(cycle_graph(5), 2)
    assert is_k_connected(path_graph(2), 1)

    print("✓ test_is_k_connected passed")


def test_subgraph_edge_lower_bound():
    """Test ceil(kn/2) and the bipartite kt bound."""
    assert subgraph_edge_lower_bound(complete_graph(5), 2) == 5
    assert subgraph_edge_lower_bound(complete_graph(5), 3) == 8
    assert subgraph_edge_lower_bound(complete_bipartite_graph(3, 3), 2) == 6
    assert subgraph_edge_lower_bound(complete_bipartite_graph(2, 3), 2) == 6

    print("✓ test_subgraph_edge_lower_bound passed")


def test_min_spanning_k_connected():
    """Test minimum spanning k-connected subgraphs and their tie-breaking."""
    H = min_spanning_k_connected(complete_graph(5), 2)
    assert H.e == 5
    assert is_k_connected(H, 2)
    assert H.edges == ((0, 1), (0, 2), (1, 3), (2, 4), (3, 4))

    H = min_spanning_k_connected(complete_bipartite_graph(3, 3), 2)
    assert H.e == 6
    assert is_k_connected(H, 2)

    C6 = cycle_graph(6)
    assert min_spanning_k_connected(C6, 2) == C6

    T = min_spanning_k_connected(complete_graph(4), 1)
    assert T.e == 3
    assert T.edges == ((0, 1), (0, 2), (0, 3))

    H = min_spanning_k_connected(complete_graph(5), 3)
    assert H.e == 8
    assert vertex_connectivity(H) >= 3

    with pytest.raises(NotKConnectedError):
        min_spanning_k_connected(cycle_graph(5), 3)

    print("✓ test_min_spanning_k_connected passed")


def test_min_spanning_budget():
    """Test that an over-budget search reports an inclusion-minimal subgraph."""
    budget = SearchBudget(max_subgraph_edges=10)
    with pytest.raises(BudgetExceededError) as info:
        min_spanning_k_connected(complete_graph(7), 2, budget)
    best = info.value.best
    assert best is not None
    assert is_k_connected(best, 2)

    greedy = greedy_minimal_subgraph(complete_graph(6), 2)
    assert is_k_connected(greedy, 2)
    for edge in greedy.edges:
        smaller = Graph(6, tuple(e for e in greedy.edges if e != edge))
        assert not is_k_connected(smaller, 2)

    # the solver's node limit does not cut the subgraph search short
    H = min_spanning_k_connected(complete_graph(5), 2, SearchBudget(max_nodes_expanded=3))
    assert H.e == 5
    with pytest.raises(BudgetExceededError) as info:
        min_spanning_k_connected(complete_graph(5), 2, SearchBudget(max_subgraph_nodes=3))
    assert "3 nodes" in str(info.value)
    assert is_k_connected(info.value.best, 2)

    print("✓ test_min_spanning_budget passed")


def test_enumerate_min_spanning_k_connected():
    """Test enumeration of every minimum subgraph."""
    cycles = enumerate_min_spanning_k_connected(complete_graph(4), 2)
    assert len(cycles) == 3
    assert all(H.e == 4 for H in cycles)

    cycles = enumerate_min_spanning_k_connected(complete_bipartite_graph(3, 3), 2)
    assert len(cycles) == 6

    trees = enumerate_min_spanning_k_connected(complete_graph(4), 1)
    assert len(trees) == 16

    print("✓ test_enumerate_min_spanning_k_connected passed")


def test_chromatic_number():
    """Test exact chromatic numbers."""
    assert chromatic_number(complete_graph(5)) == 5
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(complete_bipartite_graph(3, 3)) == 2
    assert chromatic_number(petersen_graph()) == 3
    assert chromatic_number(Graph(3)) == 1

    with pytest.raises(BudgetExceededError):
        chromatic_number(complete_graph(6), SearchBudget(max_chromatic_vertices=5))

    print("✓ test_chromatic_number passed")


if __name__ == "__main__":
    test_max_flow_value()
    test_local_connectivity()
    test_vertex_connectivity()
    test_is_k_connected()
    test_subgraph_edge_lower_bound()
    test_min_spanning_k_connected()
    test_min_spanning_budget()
    test_enumerate_min_spanning_k_connected()
    test_chromatic_number()
    print("\n✓ All connectivity tests passed!")
