"""
Edge-colourings and the quantities defined on them.
Colour classes, the normalizing recolouring, colour multisets, m_G and weights.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

import networkx as nx

from src.errors import ColouringError, GraphError, PreconditionError
from src.graph import Edge, Graph, canonical_edge


@dataclass(frozen=True)
class EdgeColouring:
    """
    Total map from the edges of a graph to colour labels 1..r.

    `labels[i]` is the colour of `graph.edges[i]`. Labels must be exactly
    1..r with no gaps.
    """

    graph: Graph
    labels: Tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(c) for c in self.labels)
        if len(labels) != self.graph.e:
            raise ColouringError(
                f"Colouring has {len(labels)} labels for {self.graph.e} edges")
        used = set(labels)
        if used and used != set(range(1, len(used) + 1)):
            raise ColouringError(
                f"Colour labels must be exactly 1..r, got {sorted(used)}")
        object.__setattr__(self, 'labels', labels)

    @property
    def r(self) -> int:
        return max(self.labels, default=0)

    def colour_of(self, u: int, v: int) -> int:
        return self.labels[self.graph.edge_index(u, v)]

    def items(self) -> Iterator[Tuple[Edge, int]]:
        return zip(self.graph.edges, self.labels)

    def class_edges(self, colour: int) -> List[Edge]:
        return [e for e, c in self.items() if c == colour]

    @classmethod
    def from_mapping(cls, graph: Graph, mapping: Mapping[Edge, int],
                     compact: bool = False) -> 'EdgeColouring':
        """
        Build a colouring from an edge -> colour mapping.

        Args:
            graph: Host graph
            mapping: Colour for every edge; keys in either orientation
            compact: Renumber arbitrary positive labels to 1..r, keeping their order

        Returns:
            EdgeColouring on graph
        """
        canonical = {canonical_edge(u, v): c for (u, v), c in mapping.items()}
        extra = set(canonical) - graph.edge_set()
        if extra:
            raise ColouringError(f"Colouring names non-edges: {sorted(extra)[:5]}")
        missing = [e for e in graph.edges if e not in canonical]
        if missing:
            raise ColouringError(f"Colouring misses edges: {missing[:5]}")
        labels = [canonical[e] for e in graph.edges]
        if any(c < 1 for c in labels):
            raise ColouringError("Colour labels must be positive integers")
        if compact:
            order = {c: i + 1 for i, c in enumerate(sorted(set(labels)))}
            labels = [order[c] for c in labels]
        return cls(graph, tuple(labels))

    @classmethod
    def monochromatic(cls, graph: Graph) -> 'EdgeColouring':
        return cls(graph, (1,) * graph.e)

    @classmethod
    def rainbow(cls, graph: Graph) -> 'EdgeColouring':
        return cls(graph, tuple(range(1, graph.e + 1)))


@dataclass(frozen=True)
class ColourMultiset:
    """Colours on the edges at one vertex, with multiplicities."""

    counts: Tuple[Tuple[int, int], ...]

    @property
    def colour_degree(self) -> int:
        return len(self.counts)

    def size(self) -> int:
        return sum(m for _, m in self.counts)

    def multiplicity(self, colour: int) -> int:
        return dict(self.counts).get(colour, 0)

    def __str__(self) -> str:
        # superscript notation: 1^2 2^3, multiplicity 1 written bare
        return " ".join(f"{c}^{m}" if m > 1 else f"{c}" for c, m in self.counts)


@dataclass(frozen=True)
class PairFunction:
    """Nonnegative integer function on the unordered vertex pairs of an n-vertex graph."""

    n: int
    values: Tuple[Tuple[Edge, int], ...]

    def __post_init__(self):
        values = dict(self.values)
        expected = {(u, v) for u in range(self.n) for v in range(u + 1, self.n)}
        if set(values) != expected:
            raise PreconditionError("Pair function must be defined on every vertex pair")
        if any(x < 0 for x in values.values()):
            raise PreconditionError("Pair function values must be nonnegative")
        object.__setattr__(self, 'values', tuple(sorted(values.items())))

    def __call__(self, u: int, v: int) -> int:
        return dict(self.values)[canonical_edge(u, v)]

    @classmethod
    def constant(cls, n: int, value: int) -> 'PairFunction':
        return cls(n, tuple(((u, v), value) for u in range(n) for v in range(u + 1, n)))


def canonical_labels(graph: Graph, labels: Sequence[int]) -> Tuple[int, ...]:
    """
    Relabel colours 1..r in order of each class's smallest edge.

    Args:
        graph: Host graph
        labels: Any labels aligned with graph.edges

    Returns:
        Canonical label tuple
    """
    order: Dict[int, int] = {}
    for c in labels:
        if c not in order:
            order[c] = len(order) + 1
    return tuple(order[c] for c in labels)


def canonicalize(phi: EdgeColouring) -> EdgeColouring:
    return EdgeColouring(phi.graph, canonical_labels(phi.graph, phi.labels))


def same_up_to_relabelling(a: EdgeColouring, b: EdgeColouring) -> bool:
    return a.graph == b.graph and canonical_labels(a.graph, a.labels) == canonical_labels(b.graph, b.labels)


def colour_class(G: Graph, phi: EdgeColouring, i: int) -> Graph:
    """
    Spanning subgraph of the colour-i edges.

    Args:
        G: Host graph
        phi: Colouring of G
        i: Colour in 1..r

    Returns:
        Spanning subgraph G_i
    """
    if not 1 <= i <= phi.r:
        raise ColouringError(f"Colour {i} out of range 1..{phi.r}")
    return Graph(G.n, tuple(phi.class_edges(i)))


def monochromatic_components(G: Graph, phi: EdgeColouring) -> List[Tuple[int, Tuple[Edge, ...]]]:
    """
    Non-trivial components of every colour class.

    Returns:
        (colour, sorted component edges) pairs, ordered by the component's smallest edge
    """
    components = []
    for colour in range(1, phi.r + 1):
        g = nx.Graph(phi.class_edges(colour))
        for nodes in nx.connected_components(g):
            comp = tuple(sorted(canonical_edge(a, b) for a, b in g.subgraph(nodes).edges()))
            components.append((colour, comp))
    components.sort(key=lambda item: item[1][0])
    return components


def normalize(G: Graph, phi: EdgeColouring) -> EdgeColouring:
    """
    Give every non-trivial monochromatic component its own colour.

    The result has exactly one non-trivial component per colour, never fewer
    colours than phi, and canonical labels.
    """
    new_label: Dict[Edge, int] = {}
    for label, (_, comp) in enumerate(monochromatic_components(G, phi), start=1):
        for e in comp:
            new_label[e] = label
    return EdgeColouring(G, tuple(new_label[e] for e in G.edges))


def is_normalized(G: Graph, phi: EdgeColouring) -> bool:
    return len(monochromatic_components(G, phi)) == phi.r


def colour_multiset(G: Graph, phi: EdgeColouring, v: int) -> ColourMultiset:
    """
    Multiset of colours on the edges at v.

    Args:
        G: Host graph
        phi: Colouring of G
        v: Vertex

    Returns:
        ColourMultiset whose support size is the colour degree of v
    """
    if not 0 <= v < G.n:
        raise GraphError(f"Vertex {v} out of range for n={G.n}")
    counts = Counter(phi.colour_of(v, w) for w in G.neighbours(v))
    return ColourMultiset(tuple(sorted(counts.items())))


def m_of(G: Graph, u: int, v: int) -> int:
    """min(deg u, deg v), less one when uv is an edge."""
    if u == v:
        raise PreconditionError("m_G is defined on pairs of distinct vertices")
    value = min(G.degree(u), G.degree(v))
    return value - 1 if G.has_edge(u, v) else value


def m_function(G: Graph) -> PairFunction:
    return PairFunction(G.n, tuple(((u, v), m_of(G, u, v))
                                   for u in range(G.n) for v in range(u + 1, G.n)))


def weight(f: PairFunction) -> int:
    return sum(x for _, x in f.values)


def colour_classes(phi: EdgeColouring) -> Dict[int, List[Edge]]:
    classes: Dict[int, List[Edge]] = {}
    for e, c in phi.items():
        classes.setdefault(c, []).append(e)
    return classes