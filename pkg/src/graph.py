"""
Graph representation for monok.
Simple undirected graphs on vertices 0..n-1 with a canonical sorted edge tuple.
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from src.errors import GraphError

Edge = Tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    """Return the edge {u, v} as an ordered pair with u < v."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Finite simple undirected graph.

    Args:
        n: Vertex count; vertices are 0..n-1
        edges: Unordered vertex pairs, in any order

    The stored edge tuple is sorted with u < v in every pair, so two graphs
    with the same edge set compare equal.
    """

    n: int
    edges: Tuple[Edge, ...] = ()
    adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _index: Dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"Graph needs at least one vertex, got n={self.n}")

        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"Edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            e = canonical_edge(u, v)
            if e in seen:
                raise GraphError(f"Duplicate edge {e}")
            seen.add(e)

        edges = tuple(sorted(seen))
        neighbours: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in edges:
            neighbours[u].append(v)
            neighbours[v].append(u)

        object.__setattr__(self, 'edges', edges)
        object.__setattr__(self, 'adjacency', tuple(tuple(sorted(a)) for a in neighbours))
        object.__setattr__(self, '_index', {e: i for i, e in enumerate(edges)})

    @property
    def e(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbours(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degrees(self) -> List[int]:
        return [len(a) for a in self.adjacency]

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._index

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge uv in the sorted edge tuple."""
        try:
            return self._index[canonical_edge(u, v)]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges)

    def is_complete(self) -> bool:
        return self.e == self.n * (self.n - 1) // 2

    def spanning_subgraph(self, edges: Iterable[Edge]) -> 'Graph':
        """Spanning subgraph on the given edges, which must belong to this graph."""
        edges = [canonical_edge(u, v) for u, v in edges]
        for e in edges:
            if e not in self._index:
                raise GraphError(f"{e} is not an edge of the host graph")
        return Graph(self.n, tuple(edges))

    def with_edge(self, u: int, v: int) -> 'Graph':
        """Copy of the graph with one more edge."""
        return Graph(self.n, self.edges + (canonical_edge(u, v),))

    def complement_pairs(self) -> List[Edge]:
        """All non-adjacent vertex pairs u < v."""
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if not self.has_edge(u, v)]

    def relabel(self, perm: Sequence[int]) -> 'Graph':
        """Image of the graph under the vertex permutation v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        return Graph(self.n, tuple(canonical_edge(perm[u], perm[v]) for u, v in self.edges))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> 'Graph':
        """Convert a networkx graph, renumbering its nodes in sorted order."""
        order = {node: i for i, node in enumerate(sorted(g.nodes()))}
        return cls(len(order), tuple(canonical_edge(order[a], order[b]) for a, b in g.edges()))


def complete_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def path_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def complete_bipartite_graph(s: int, t: int) -> Graph:
    """K_{s,t} with the s-side numbered first."""
    return Graph.from_networkx(nx.complete_bipartite_graph(s, t))


def petersen_graph() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())
