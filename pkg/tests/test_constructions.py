"""
Unit tests for constructions module.
"""
from src.colouring import EdgeColouring
from src.connectivity import is_k_connected, vertex_connectivity
from src.constructions import (bipartite_harary, harary, lower_bound_colouring, random_colouring,
                               random_graph, random_k_connected, random_supergraph,
                               regular_bipartite, spanning_tree_colouring)
from src.errors import GraphError, NotKConnectedError, PreconditionError
from src.graph import Graph, complete_bipartite_graph, complete_graph, cycle_graph, path_graph
from src.verify import is_monochromatic_k_connected
import networkx as nx
import pytest
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def test_harary():
    """Test Harary graphs: k-connected with ceil(kn/2) edges."""
    assert harary(5, 2) == cycle_graph(5)
    H = harary(6, 3)
    assert H.e == 9
    assert vertex_connectivity(H) == 3
    assert harary(5, 3).e == 8

    for n in range(3, 13):
        for k in range(2, n):
            H = harary(n, k)
            assert H.n == n
            assert H.e == (k * n + 1) // 2
            assert is_k_connected(H, k)

    with pytest.raises(PreconditionError):
        harary(4, 4)
    with pytest.raises(PreconditionError):
        harary(5, 1)

    print("✓ test_harary passed")


def test_regular_bipartite():
    """Test the circulant k-regular bipartite graph."""
    G = regular_bipartite(3, 2)
    assert nx.is_isomorphic(G.to_networkx(), cycle_graph(6).to_networkx())
    assert regular_bipartite(4, 4) == complete_bipartite_graph(4, 4)

    G = regular_bipartite(4, 3)
    assert G.e == 12
    assert set(G.degrees()) == {3}
    assert vertex_connectivity(G) == 3

    with pytest.raises(PreconditionError):
        regular_bipartite(2, 3)

    print("✓ test_regular_bipartite passed")


def test_bipartite_harary():
    """Test H_(s,t,k) for unbalanced classes."""
    H = bipartite_harary(3, 5, 2)
    assert H.e == 10
    assert vertex_connectivity(H) == 2
    assert nx.is_bipartite(H.to_networkx())

    assert bipartite_harary(3, 4, 3) == complete_bipartite_graph(3, 4)
    assert bipartite_harary(4, 4, 2) == regular_bipartite(4, 2)

    for s in range(2, 9):
        for t in range(s, 9):
            for k in range(2, s + 1):
                H = bipartite_harary(s, t, k)
                assert H.n == s + t
                assert H.e == k * t
                assert is_k_connected(H, k)

    with pytest.raises(PreconditionError):
        bipartite_harary(4, 3, 2)

    print("✓ test_bipartite_harary passed")


def test_lower_bound_colouring():
    """Test H in one colour plus a fresh colour per remaining edge."""
    K33 = complete_bipartite_graph(3, 3)
    phi = lower_bound_colouring(K33, regular_bipartite(3, 2), 2)
    assert phi.r == 4
    assert is_monochromatic_k_connected(K33, phi, 2).ok

    K5 = complete_graph(5)
    with pytest.raises(GraphError):
        lower_bound_colouring(K5, cycle_graph(4), 2)
    with pytest.raises(GraphError):
        lower_bound_colouring(cycle_graph(5), Graph(5, ((0, 2), (1, 3))), 1)
    with pytest.raises(NotKConnectedError):
        lower_bound_colouring(K5, path_graph(5), 2)

    print("✓ test_lower_bound_colouring passed")


def test_spanning_tree_colouring():
    """Test the tree-plus-singletons colouring."""
    C5 = cycle_graph(5)
    phi = spanning_tree_colouring(C5)
    assert phi.r == 2
    assert is_monochromatic_k_connected(C5, phi, 1).ok

    K4 = complete_graph(4)
    assert spanning_tree_colouring(K4).r == 4

    with pytest.raises(PreconditionError):
        spanning_tree_colouring(Graph(4, ((0, 1), (2, 3))))

    print("✓ test_spanning_tree_colouring passed")


def test_random_generators():
    """Test that seeded generators are reproducible and honour their contracts."""
    assert random_graph(8, 0.5, seed=3) == random_graph(8, 0.5, seed=3)

    G = random_k_connected(7, 2, 0.6, seed=1)
    assert is_k_connected(G, 2)

    phi = random_colouring(complete_graph(5), 3, seed=4)
    assert phi == random_colouring(complete_graph(5), 3, seed=4)
    assert 1 <= phi.r <= 3
    with pytest.raises(PreconditionError):
        random_colouring(complete_graph(3), 0)

    H = harary(7, 2)
    for extra in (0, 1, 3):
        G = random_supergraph(H, extra, seed=extra)
        assert G.e == H.e + extra
        assert H.edge_set() <= G.edge_set()
    assert random_supergraph(H, 100, seed=0) == complete_graph(7)

    print("✓ test_random_generators passed")


def test_supergraph_colourings_verify():
    """Test the lower-bound colouring on random supergraphs of Harary graphs."""
    for k in (2, 3):
        H = harary(6, k)
        for seed in range(3):
            G = random_supergraph(H, 2, seed=seed)
            phi = lower_bound_colouring(G, H, k)
            assert phi.r == G.e - H.e + 1
            assert is_monochromatic_k_connected(G, phi, k).ok
            assert EdgeColouring.monochromatic(G).r == 1

    print("✓ test_supergraph_colourings_verify passed")


if __name__ == "__main__":
    test_harary()
    test_regular_bipartite()
    test_bipartite_harary()
    test_lower_bound_colouring()
    test_spanning_tree_colouring()
    test_random_generators()
    test_supergraph_colourings_verify()
    print("\n✓ All constructions tests passed!")
