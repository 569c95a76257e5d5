"""
Extremal graphs and colourings.
Harary graphs, circulant k-regular bipartite graphs, their unbalanced
extension, the lower-bound colouring, and seeded random generators.
"""
from typing import List, Optional
import random

import networkx as nx

from src.colouring import EdgeColouring
from src.connectivity import is_k_connected
from src.errors import GraphError, NotKConnectedError, PreconditionError
from src.graph import Edge, Graph, canonical_edge


def harary(n: int, k: int) -> Graph:
    """
    Harary graph H_{n,k}: k-connected on n vertices with ceil(kn/2) edges.

    Circulant on Z_n joining i to i+-1..i+-floor(k/2); for odd k a diameter
    matching, with one vertex of degree k+1 when n is odd too.
    """
    if k < 2 or n <= k:
        raise PreconditionError(f"Harary graph needs n > k >= 2, got n={n}, k={k}")
    return Graph.from_networkx(nx.hkn_harary_graph(k, n))


def regular_bipartite(s: int, k: int) -> Graph:
    """
    k-regular k-connected bipartite graph with classes a_0..a_{s-1}, b_0..b_{s-1}.

    a_i is joined to b_i, ..., b_{i+k-1} (indices mod s). Vertex a_i is i,
    vertex b_j is s + j.
    """
    if k < 2 or s < k:
        raise PreconditionError(f"Regular bipartite graph needs s >= k >= 2, got s={s}, k={k}")
    edges = [(i, s + (i + j) % s) for i in range(s) for j in range(k)]
    return Graph(2 * s, tuple(edges))


def bipartite_harary(s: int, t: int, k: int) -> Graph:
    """
    H_{s,t,k}: k-connected bipartite, classes of sizes s <= t, exactly kt edges.

    The first s vertices of Y carry regular_bipartite(s, k); the j-th
    remaining Y vertex takes the X-window a_j, ..., a_{j+k-1} (mod s).
    """
    if not t >= s >= k >= 2:
        raise PreconditionError(f"H_(s,t,k) needs t >= s >= k >= 2, got s={s}, t={t}, k={k}")
    edges: List[Edge] = list(regular_bipartite(s, k).edges)
    for j in range(t - s):
        y = 2 * s + j
        edges.extend((((j + i) % s), y) for i in range(k))
    return Graph(s + t, tuple(edges))


def lower_bound_colouring(G: Graph, H: Graph, k: int) -> EdgeColouring:
    """
    H in colour 1, every other edge of G in its own colour.

    Args:
        G: Host graph
        H: Spanning k-connected subgraph of G
        k: Connectivity of H

    Returns:
        Colouring with e(G) - e(H) + 1 colours
    """
    if H.n != G.n:
        raise GraphError(f"H has {H.n} vertices, G has {G.n}: H must be spanning")
    outside = set(H.edges) - G.edge_set()
    if outside:
        raise GraphError(f"H is not a subgraph of G: {sorted(outside)[:5]}")
    if not is_k_connected(H, k):
        raise NotKConnectedError(f"H is not {k}-connected")

    inner = H.edge_set()
    labels = []
    fresh = 2
    for e in G.edges:
        if e in inner:
            labels.append(1)
        else:
            labels.append(fresh)
            fresh += 1
    return EdgeColouring(G, tuple(labels))


def spanning_tree_colouring(G: Graph) -> EdgeColouring:
    """
    A spanning tree in one colour, the remaining edges in distinct colours.

    Uses the lexicographically smallest spanning tree; e - n + 2 colours.
    """
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    for rank, (u, v) in enumerate(G.edges):
        g.add_edge(u, v, weight=rank)
    if G.n < 2 or not nx.is_connected(g):
        raise PreconditionError("Spanning tree colouring needs a connected graph on n >= 2 vertices")
    tree = G.spanning_subgraph(nx.minimum_spanning_tree(g, algorithm='kruskal').edges())
    return lower_bound_colouring(G, tree, 1)


def random_graph(n: int, p: float, seed: Optional[int] = None) -> Graph:
    """Erdos-Renyi G(n, p)."""
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def random_k_connected(n: int, k: int, p: float, seed: Optional[int] = None,
                       tries: int = 200) -> Graph:
    """
    Rejection-sample G(n, p) until the draw is k-connected.

    Args:
        n: Vertex count
        k: Required connectivity
        p: Edge probability
        seed: Seed for the draws
        tries: Draws before giving up

    Returns:
        A k-connected graph
    """
    rng = random.Random(seed)
    for _ in range(tries):
        G = random_graph(n, p, seed=rng.randrange(2 ** 32))
        if is_k_connected(G, k):
            return G
    raise PreconditionError(f"No {k}-connected G({n}, {p}) sample in {tries} tries")


def random_colouring(G: Graph, r: int, seed: Optional[int] = None) -> EdgeColouring:
    """Colours drawn uniformly from 1..r per edge, then compacted to 1..r'."""
    if r < 1:
        raise PreconditionError(f"Need at least one colour, got r={r}")
    rng = random.Random(seed)
    mapping = {e: rng.randint(1, r) for e in G.edges}
    return EdgeColouring.from_mapping(G, mapping, compact=True)


def random_supergraph(H: Graph, extra: int, seed: Optional[int] = None) -> Graph:
    """H plus `extra` edges drawn from its complement (all of it when fewer remain)."""
    rng = random.Random(seed)
    missing = H.complement_pairs()
    added = rng.sample(missing, min(extra, len(missing)))
    return Graph(H.n, H.edges + tuple(canonical_edge(u, v) for u, v in added))
