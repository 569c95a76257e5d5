"""
Unit tests for bounds module.
"""
from src.bounds import (bipartite_prediction, ceil_div, complete_bipartite_bounds,
                        complete_graph_bounds, mc1_bounds, mck_upper_bound, min_edge_count,
                        small_k_prediction)
from src.errors import PreconditionError
from src.graph import (Graph, complete_bipartite_graph, complete_graph, cycle_graph, path_graph)
import pytest
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def test_ceil_div():
    """Test integer ceilings."""
    assert ceil_div(0, 3) == 0
    assert ceil_div(7, 2) == 4
    assert ceil_div(6, 2) == 3
    assert ceil_div(1, 5) == 1
    with pytest.raises(ValueError):
        ceil_div(-1, 2)
    with pytest.raises(ValueError):
        ceil_div(1, 0)

    print("✓ test_ceil_div passed")


def test_min_edge_count():
    """Test ceil(kn/2)."""
    assert min_edge_count(5, 2) == 5
    assert min_edge_count(5, 3) == 8
    assert min_edge_count(6, 3) == 9
    with pytest.raises(PreconditionError):
        min_edge_count(3, 3)

    print("✓ test_min_edge_count passed")


def test_complete_graph_bounds():
    """Test the K_n interval and where it is exact."""
    b = complete_graph_bounds(5, 2)
    assert (b.lower, b.upper, b.exact) == (6, 7, 6)
    assert complete_graph_bounds(5, 3).lower == 3
    b = complete_graph_bounds(5, 4)
    assert (b.lower, b.upper) == (1, 1)
    b = complete_graph_bounds(7, 2)
    assert (b.lower, b.upper) == (15, 17)
    assert complete_graph_bounds(7, 6).exact is None

    for n in range(4, 12):
        for k in range(2, n):
            b = complete_graph_bounds(n, k)
            assert 1 <= b.lower <= b.upper

    with pytest.raises(PreconditionError):
        complete_graph_bounds(4, 4)

    print("✓ test_complete_graph_bounds passed")


def test_complete_bipartite_bounds():
    """Test the K_(s,t) interval, balanced and unbalanced."""
    b = complete_bipartite_bounds(3, 3, 2)
    assert (b.lower, b.upper, b.exact) == (4, 5, 4)
    b = complete_bipartite_bounds(2, 3, 2)
    assert (b.lower, b.upper, b.exact) == (1, 4, 1)
    b = complete_bipartite_bounds(3, 5, 2)
    assert (b.lower, b.upper, b.exact) == (6, 11, 6)
    assert complete_bipartite_bounds(4, 5, 4).exact == 1
    assert complete_bipartite_bounds(5, 6, 4).exact is None

    with pytest.raises(PreconditionError):
        complete_bipartite_bounds(3, 2, 2)

    print("✓ test_complete_bipartite_bounds passed")


def test_mck_upper_bound():
    """Test the general upper bound and its agreement with the K_n formula."""
    assert mck_upper_bound(complete_graph(5), 2) == 7
    assert mck_upper_bound(cycle_graph(6), 2) == 1
    assert mck_upper_bound(complete_graph(7), 2) == 17

    for n in range(4, 10):
        for k in range(2, n):
            assert mck_upper_bound(complete_graph(n), k) == complete_graph_bounds(n, k).upper

    with pytest.raises(PreconditionError):
        mck_upper_bound(complete_graph(4), 1)
    with pytest.raises(PreconditionError):
        mck_upper_bound(complete_graph(3), 3)

    print("✓ test_mck_upper_bound passed")


def test_mc1_bounds():
    """Test e - n + 2 <= mc_1 <= e - n + chi."""
    assert mc1_bounds(path_graph(4)) == (1, 1)
    assert mc1_bounds(cycle_graph(5)) == (2, 3)
    assert mc1_bounds(complete_graph(4)) == (4, 6)
    with pytest.raises(PreconditionError):
        mc1_bounds(Graph(4, ((0, 1), (2, 3))))
    with pytest.raises(PreconditionError):
        mc1_bounds(Graph(1))

    print("✓ test_mc1_bounds passed")


def test_predictions():
    """Test the closed-form predictions used by the theorem suites."""
    K5 = complete_graph(5)
    assert small_k_prediction(K5, 2, 5) == 6
    assert small_k_prediction(K5, 2, 6) is None
    assert small_k_prediction(complete_graph(8), 6, 24) is None

    K33 = complete_bipartite_graph(3, 3)
    assert bipartite_prediction(K33, 3, 3, 2, 6) == 4
    assert bipartite_prediction(K33, 3, 3, 2, 7) is None
    K56 = complete_bipartite_graph(5, 6)
    assert bipartite_prediction(K56, 5, 6, 4, 24) is None
    assert bipartite_prediction(K56, 5, 6, 3, 18) == 30 - 18 + 1

    print("✓ test_predictions passed")


if __name__ == "__main__":
    test_ceil_div()
    test_min_edge_count()
    test_complete_graph_bounds()
    test_complete_bipartite_bounds()
    test_mck_upper_bound()
    test_mc1_bounds()
    test_predictions()
    print("\n✓ All bounds tests passed!")
