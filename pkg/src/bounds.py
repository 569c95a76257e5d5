"""
Closed-form bounds on monochromatic connection numbers.
Integer arithmetic only; ceilings are (a + b - 1) // b on nonnegative operands.
"""
from dataclasses import dataclass
from math import comb
from typing import Optional, Tuple

import networkx as nx

from src.config import SearchBudget
from src.connectivity import chromatic_number
from src.errors import PreconditionError
from src.graph import Graph


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a / b for a >= 0, b > 0."""
    if a < 0 or b <= 0:
        raise ValueError(f"ceil_div needs a >= 0 and b > 0, got {a}, {b}")
    return (a + b - 1) // b


@dataclass(frozen=True)
class ClosedForm:
    """Interval for mc_k of a graph family, with the exact value where it is proven."""

    lower: int
    upper: int
    exact: Optional[int]
    lower_source: str
    upper_source: str


def min_edge_count(n: int, k: int) -> int:
    """ceil(kn/2): fewest edges of a k-connected graph on n > k vertices."""
    if k < 1 or n <= k:
        raise PreconditionError(f"Need n > k >= 1, got n={n}, k={k}")
    return ceil_div(k * n, 2)


def mck_upper_bound(G: Graph, k: int) -> int:
    """
    e(G) - ceil((k * C(n,2) - e(G)) / (n - 2)) + 1.

    Args:
        G: k-connected graph on n > k vertices
        k: Connectivity, at least 2 (use mc1_bounds for k = 1)

    Returns:
        Upper bound on mc_k(G)
    """
    if k < 2:
        raise PreconditionError("mck_upper_bound needs k >= 2; use mc1_bounds for k = 1")
    if G.n <= k:
        raise PreconditionError(f"mck_upper_bound needs n > k, got n={G.n}, k={k}")
    return G.e - ceil_div(k * comb(G.n, 2) - G.e, G.n - 2) + 1


def mc1_bounds(G: Graph, budget: Optional[SearchBudget] = None) -> Tuple[int, int]:
    """
    (e - n + 2, e - n + chi(G)) for a connected graph on n >= 2 vertices.
    """
    if G.n < 2:
        raise PreconditionError("mc1_bounds needs n >= 2")
    if not nx.is_connected(G.to_networkx()):
        raise PreconditionError("mc1_bounds needs a connected graph")
    return G.e - G.n + 2, G.e - G.n + chromatic_number(G, budget)


def complete_graph_bounds(n: int, k: int) -> ClosedForm:
    """
    Bounds on mc_k(K_n) for n > k >= 2; exact for k in {2, 3, 4, 5}.
    """
    if k < 2 or n <= k:
        raise PreconditionError(f"Need n > k >= 2, got n={n}, k={k}")
    edges = comb(n, 2)
    lower = edges - min_edge_count(n, k) + 1
    upper = edges - ceil_div((k - 1) * n * (n - 1), 2 * (n - 2)) + 1
    exact = lower if k <= 5 else None
    return ClosedForm(lower, upper, exact,
                      "C(n,2) - ceil(kn/2) + 1 (Harary subgraph, lower-bound colouring)",
                      "C(n,2) - ceil((k-1)n(n-1)/(2(n-2))) + 1")


def complete_bipartite_bounds(s: int, t: int, k: int) -> ClosedForm:
    """
    Bounds on mc_k(K_{s,t}) for t >= s >= k >= 2.

    Exact when s = k or k in {2, 3}; for s = t the upper bound tightens and
    the value is exact for k in {2, 3, 4, 5}.
    """
    if not t >= s >= k >= 2:
        raise PreconditionError(f"Need t >= s >= k >= 2, got s={s}, t={t}, k={k}")
    lower = s * t - k * t + 1
    if s == t:
        upper = t * t - ceil_div((2 * k - 1) * t, 2) + 1
        upper_source = "t^2 - ceil((k - 1/2)t) + 1"
        proven = k <= 5
    else:
        upper = s * t - ceil_div(k * t, 2) + 1
        upper_source = "st - ceil(kt/2) + 1"
        proven = s == k or k <= 3
    return ClosedForm(lower, upper, lower if proven else None,
                      "st - kt + 1 (H_(s,t,k) subgraph, lower-bound colouring)", upper_source)


def small_k_prediction(G: Graph, k: int, e_h: int) -> Optional[int]:
    """
    mc_k(G) = e(G) - ceil(kn/2) + 1 when a minimum spanning k-connected
    subgraph has ceil(kn/2) edges and k is in {2, 3, 4, 5}; None otherwise.
    """
    if 2 <= k <= 5 and G.n > k and e_h == min_edge_count(G.n, k):
        return G.e - e_h + 1
    return None


def bipartite_prediction(G: Graph, s: int, t: int, k: int, e_h: int) -> Optional[int]:
    """
    mc_k(G) = e(G) - kt + 1 for a k-connected bipartite G with classes s <= t
    whose minimum spanning k-connected subgraph has kt edges, when k is in
    {2, 3} (or s = t and k in {2, 3, 4, 5}); None otherwise.
    """
    if e_h != k * t or not t >= s >= k >= 2:
        return None
    if k <= 3 or (s == t and k <= 5):
        return G.e - k * t + 1
    return None
