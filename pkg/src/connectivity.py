"""
Connectivity primitives for monok.
Vertex-split max flow, vertex connectivity, minimum spanning k-connected
subgraphs and exact chromatic numbers.
"""
from typing import Hashable, Iterable, Iterator, List, Optional, Tuple
import logging

import networkx as nx

from src.config import SearchBudget, SearchCounter
from src.errors import BudgetExceededError, NotKConnectedError, PreconditionError
from src.graph import Edge, Graph

log = logging.getLogger(__name__)

Arc = Tuple[Hashable, Hashable, int]

SOURCE = "source"
SINK = "sink"


def max_flow_value(arcs: Iterable[Arc], source: Hashable = SOURCE, sink: Hashable = SINK) -> int:
    """
    Integral maximum flow value of a capacitated arc list.

    Args:
        arcs: (tail, head, capacity) triples; repeated arcs add capacity
        source: Source node
        sink: Sink node

    Returns:
        Maximum flow value
    """
    network = nx.DiGraph()
    network.add_node(source)
    network.add_node(sink)
    for tail, head, capacity in arcs:
        if network.has_edge(tail, head):
            network[tail][head]['capacity'] += capacity
        else:
            network.add_edge(tail, head, capacity=capacity)
    return int(nx.maximum_flow_value(network, source, sink))


def split_arcs(edges: Iterable[Edge], s: int, t: int) -> List[Arc]:
    """
    Vertex-split network for internally disjoint s-t paths.

    Every vertex other than s and t becomes an in/out pair joined by a unit
    arc; every edge becomes two unit arcs.
    """
    def node(x: int, side: str) -> Hashable:
        if x == s:
            return SOURCE
        if x == t:
            return SINK
        return (side, x)

    arcs: List[Arc] = []
    internal = set()
    for a, b in edges:
        for tail, head in ((a, b), (b, a)):
            if tail == t or head == s:
                continue
            arcs.append((node(tail, 'out'), node(head, 'in'), 1))
        internal.update(x for x in (a, b) if x not in (s, t))
    arcs.extend((('in', x), ('out', x), 1) for x in sorted(internal))
    return arcs


def local_connectivity(edges: Iterable[Edge], s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths, the direct edge included."""
    if s == t:
        raise PreconditionError("Endpoints must differ")
    return max_flow_value(split_arcs(edges, s, t))


def vertex_connectivity(G: Graph) -> int:
    """
    Largest k such that G is k-connected (0 when disconnected).

    Uses the min-degree vertex v: flows from v to its non-neighbours and
    between non-adjacent neighbours of v cover every minimum vertex cut.
    """
    if G.n < 2:
        raise PreconditionError("Vertex connectivity needs at least 2 vertices")
    if G.is_complete():
        return G.n - 1

    degrees = G.degrees()
    v = degrees.index(min(degrees))
    best = degrees[v]
    neighbours = set(G.neighbours(v))

    for w in range(G.n):
        if w != v and w not in neighbours:
            best = min(best, local_connectivity(G.edges, v, w))
            if best == 0:
                return 0

    around = sorted(neighbours)
    for i, x in enumerate(around):
        for y in around[i + 1:]:
            if not G.has_edge(x, y):
                best = min(best, local_connectivity(G.edges, x, y))
    return best


def is_k_connected(G: Graph, k: int) -> bool:
    if G.n < k + 1:
        return False
    if G.min_degree < k:
        return False
    return vertex_connectivity(G) >= k


def require_k_connected(G: Graph, k: int) -> None:
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    if not is_k_connected(G, k):
        raise NotKConnectedError(f"Graph (n={G.n}, e={G.e}) is not {k}-connected")


def subgraph_edge_lower_bound(G: Graph, k: int) -> int:
    """
    Edge count no spanning k-connected subgraph of G can go below.

    ceil(kn/2) always; kt when G is connected bipartite with larger class t.
    """
    bound = (k * G.n + 1) // 2
    g = G.to_networkx()
    if G.e and nx.is_connected(g) and nx.is_bipartite(g):
        top, bottom = nx.bipartite.sets(g)
        bound = max(bound, k * max(len(top), len(bottom)))
    return bound


def _lex_smallest_spanning_tree(G: Graph) -> Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    for rank, (u, v) in enumerate(G.edges):
        g.add_edge(u, v, weight=rank)
    tree = nx.minimum_spanning_tree(g, algorithm='kruskal')
    return G.spanning_subgraph(tree.edges())


def greedy_minimal_subgraph(G: Graph, k: int) -> Graph:
    """Inclusion-minimal spanning k-connected subgraph: drop edges from the largest down."""
    kept = list(G.edges)
    for edge in reversed(G.edges):
        trial = [e for e in kept if e != edge]
        if is_k_connected(Graph(G.n, tuple(trial)), k):
            kept = trial
    return Graph(G.n, tuple(kept))


def _subgraphs_of_size(G: Graph, k: int, m: int, counter: SearchCounter) -> Iterator[Graph]:
    """
    Spanning k-connected subgraphs of G with exactly m edges, lexicographic order.

    Include-first DFS over the sorted edge list; pruned by reachable degree
    and by k-connectivity of what can still be kept.
    """
    edges = G.edges
    e = len(edges)
    rest = [[0] * G.n for _ in range(e + 1)]
    for i in range(e - 1, -1, -1):
        rest[i] = rest[i + 1][:]
        u, v = edges[i]
        rest[i][u] += 1
        rest[i][v] += 1

    degree = [0] * G.n
    chosen: List[Edge] = []

    def search(i: int) -> Iterator[Graph]:
        counter.tick()
        if len(chosen) == m:
            if min(degree) >= k:
                H = Graph(G.n, tuple(chosen))
                if is_k_connected(H, k):
                    yield H
            return
        if len(chosen) + (e - i) < m:
            return
        if any(degree[v] + rest[i][v] < k for v in range(G.n)):
            return

        u, v = edges[i]
        chosen.append(edges[i])
        degree[u] += 1
        degree[v] += 1
        yield from search(i + 1)
        chosen.pop()
        degree[u] -= 1
        degree[v] -= 1

        # dropping edge i: what remains available must still be k-connected
        available = Graph(G.n, tuple(chosen) + edges[i + 1:])
        if is_k_connected(available, k):
            yield from search(i + 1)

    yield from search(0)


def min_spanning_k_connected(G: Graph, k: int, budget: Optional[SearchBudget] = None) -> Graph:
    """
    Minimum spanning k-connected subgraph, lexicographically smallest edge set.

    Args:
        G: k-connected host graph
        k: Connectivity
        budget: Search limits (max_subgraph_edges, max_subgraph_vertices, nodes, time)

    Returns:
        Spanning subgraph H with e(H) minimum

    Raises:
        BudgetExceededError: with `best` set to an inclusion-minimal subgraph
    """
    budget = budget or SearchBudget()
    require_k_connected(G, k)
    if k == 1:
        return _lex_smallest_spanning_tree(G)

    if G.e > budget.max_subgraph_edges or G.n > budget.max_subgraph_vertices:
        raise BudgetExceededError(
            f"Subgraph search limited to e <= {budget.max_subgraph_edges}, "
            f"n <= {budget.max_subgraph_vertices}; got e={G.e}, n={G.n}",
            best=greedy_minimal_subgraph(G, k))

    counter = SearchCounter(budget, "min_spanning_k_connected",
                            limit=budget.max_subgraph_nodes)
    try:
        for m in range(subgraph_edge_lower_bound(G, k), G.e + 1):
            for H in _subgraphs_of_size(G, k, m, counter):
                log.debug("Minimum spanning %d-connected subgraph has %d edges (%d nodes)",
                          k, m, counter.nodes)
                return H
    except BudgetExceededError as exc:
        raise BudgetExceededError(str(exc), best=greedy_minimal_subgraph(G, k)) from None
    return G


def enumerate_min_spanning_k_connected(G: Graph, k: int,
                                       budget: Optional[SearchBudget] = None) -> List[Graph]:
    """
    Every minimum spanning k-connected subgraph of G, lexicographic order.

    Args:
        G: k-connected host graph
        k: Connectivity
        budget: Search limits

    Returns:
        List of subgraphs, all with the minimum edge count
    """
    budget = budget or SearchBudget()
    require_k_connected(G, k)
    if G.e > budget.max_subgraph_edges or G.n > budget.max_subgraph_vertices:
        raise BudgetExceededError(
            f"Subgraph enumeration limited to e <= {budget.max_subgraph_edges}, "
            f"n <= {budget.max_subgraph_vertices}; got e={G.e}, n={G.n}")

    counter = SearchCounter(budget, "enumerate_min_spanning_k_connected",
                            limit=budget.max_subgraph_nodes)
    start = G.n - 1 if k == 1 else subgraph_edge_lower_bound(G, k)
    for m in range(start, G.e + 1):
        found = list(_subgraphs_of_size(G, k, m, counter))
        if found:
            return found
    return [G]


def _colourable(order: List[int], neighbours: List[set], colours: int,
                counter: SearchCounter) -> bool:
    assignment = {}

    def place(i: int, used: int) -> bool:
        counter.tick()
        if i == len(order):
            return True
        v = order[i]
        taken = {assignment[w] for w in neighbours[v] if w in assignment}
        # a fresh colour beyond used+1 is symmetric to used+1
        for c in range(1, min(colours, used + 1) + 1):
            if c not in taken:
                assignment[v] = c
                if place(i + 1, max(used, c)):
                    return True
                del assignment[v]
        return False

    return place(0, 0)


def chromatic_number(G: Graph, budget: Optional[SearchBudget] = None) -> int:
    """
    Exact chromatic number by backtracking.

    Args:
        G: Graph with n <= budget.max_chromatic_vertices
        budget: Search limits

    Returns:
        Chromatic number
    """
    budget = budget or SearchBudget()
    if G.n > budget.max_chromatic_vertices:
        raise BudgetExceededError(
            f"Chromatic number limited to n <= {budget.max_chromatic_vertices}, got n={G.n}")
    if G.e == 0:
        return 1

    g = G.to_networkx()
    upper = max(nx.greedy_color(g, strategy='largest_first').values()) + 1
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    neighbours = [set(G.neighbours(v)) for v in range(G.n)]
    counter = SearchCounter(budget, "chromatic_number")
    for colours in range(2, upper):
        if _colourable(order, neighbours, colours, counter):
            return colours
    return upper
