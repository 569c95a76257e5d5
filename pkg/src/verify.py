"""
Monochromatic path counting and verification.
Counts internally disjoint monochromatic u-v paths, decides monochromatic
k-connectedness and evaluates the super-path weight inequality.
"""
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Tuple
import logging

import networkx as nx

from src.colouring import EdgeColouring, PairFunction, colour_classes, m_of, weight
from src.config import SearchBudget, SearchCounter
from src.connectivity import SINK, SOURCE, Arc, local_connectivity, max_flow_value
from src.errors import BudgetExceededError, PreconditionError
from src.graph import Edge, Graph

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathSystem:
    """Internally disjoint monochromatic paths between one vertex pair."""

    endpoints: Edge
    paths: Tuple[Tuple[int, ...], ...] = ()
    colours: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.paths)

    def is_valid(self, G: Graph, phi: EdgeColouring) -> bool:
        """Check every path invariant against the graph and colouring."""
        u, v = self.endpoints
        if len(self.paths) != len(self.colours) or len(set(self.paths)) != len(self.paths):
            return False
        interiors = set()
        for path, colour in zip(self.paths, self.colours):
            if len(path) < 2 or path[0] != u or path[-1] != v or len(set(path)) != len(path):
                return False
            for a, b in zip(path, path[1:]):
                if not G.has_edge(a, b) or phi.colour_of(a, b) != colour:
                    return False
            inner = set(path[1:-1])
            if inner & interiors:
                return False
            interiors |= inner
        return True


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a monochromatic k-connectivity check."""

    k: int
    ok: bool
    pairs_checked: int
    witnesses: Dict[Edge, PathSystem] = field(default_factory=dict)
    failing_pair: Optional[Edge] = None
    failing_count: Optional[int] = None


@dataclass(frozen=True)
class SuperpathBoundReport:
    """Both sides of e(G) >= ceil(w(f)/(n-2)) + r - 1 for the exact super-path profile."""

    holds: bool
    lhs: int
    rhs: int
    weight: int
    r: int
    tight: bool
    degree_spread_ok: Optional[bool]
    profile: PairFunction


@dataclass
class _Candidate:
    colour: int
    path: Tuple[int, ...]
    mask: int


def _class_graphs(phi: EdgeColouring) -> Dict[int, nx.Graph]:
    return {c: nx.Graph(edges) for c, edges in colour_classes(phi).items()}


def _enumerate_paths(classes: Dict[int, nx.Graph], u: int, v: int, super_only: bool,
                     max_paths: int) -> List[_Candidate]:
    """All monochromatic u-v paths sorted by (colour, length, vertex sequence)."""
    candidates: List[_Candidate] = []
    for colour in sorted(classes):
        g = classes[colour]
        if u not in g or v not in g or not nx.has_path(g, u, v):
            continue
        found = []
        for path in nx.all_simple_paths(g, u, v):
            if super_only and len(path) == 2:
                continue
            found.append(tuple(path))
            if len(found) > max_paths:
                raise BudgetExceededError(
                    f"Colour {colour} has more than {max_paths} paths between {u} and {v}")
        for path in sorted(found, key=lambda p: (len(p), p)):
            mask = 0
            for x in path[1:-1]:
                mask |= 1 << x
            candidates.append(_Candidate(colour, path, mask))
    return candidates


def _layered_arcs(phi: EdgeColouring, u: int, v: int, super_only: bool) -> List[Arc]:
    """Colour-layered network: one layer per colour, layers meet at unit vertex gadgets."""
    arcs: List[Arc] = []
    gadgets = set()

    def layer(colour: int, x: int, side: str) -> Hashable:
        return (colour, x, side)

    for (a, b), colour in phi.items():
        for tail, head in ((a, b), (b, a)):
            if tail == v or head == u:
                continue
            if super_only and tail == u and head == v:
                continue
            tail_node = SOURCE if tail == u else layer(colour, tail, 'out')
            head_node = SINK if head == v else layer(colour, head, 'in')
            arcs.append((tail_node, head_node, 1))
        for x in (a, b):
            if x not in (u, v):
                gadgets.add((colour, x))

    for colour, x in sorted(gadgets):
        arcs.append((layer(colour, x, 'in'), ('in', x), 1))
        arcs.append((('out', x), layer(colour, x, 'out'), 1))
    for x in sorted({x for _, x in gadgets}):
        arcs.append((('in', x), ('out', x), 1))
    return arcs


def relaxed_upper_bound(G: Graph, phi: EdgeColouring, u: int, v: int,
                        super_only: bool = False) -> int:
    """
    Flow bound on the number of disjoint monochromatic u-v paths.

    A unit of flow may change colour at a shared vertex gadget, so the value
    can exceed the true count but never falls below it.
    """
    if u == v:
        raise PreconditionError("Endpoints must differ")
    return max_flow_value(_layered_arcs(phi, u, v, super_only))


def _per_colour_bound(classes: Dict[int, nx.Graph], u: int, v: int, super_only: bool) -> int:
    total = 0
    for g in classes.values():
        if u in g and v in g:
            value = local_connectivity(g.edges(), u, v)
            if super_only and g.has_edge(u, v):
                value -= 1
            total += value
    return total


def count_disjoint_mono_paths(G: Graph, phi: EdgeColouring, u: int, v: int, cap: int,
                              super_only: bool = False,
                              budget: Optional[SearchBudget] = None) -> Tuple[int, PathSystem]:
    """
    Count internally disjoint monochromatic u-v paths, up to cap.

    Args:
        G: Graph
        phi: Colouring of G
        u, v: Distinct endpoints
        cap: Stop once this many paths are found
        super_only: Ignore the single-edge path uv
        budget: max_paths guards enumeration; nodes and time guard the search

    Returns:
        (count, witness) with count = min(cap, maximum) and a witness of that size
    """
    if u == v:
        raise PreconditionError("Endpoints must differ")
    if cap < 1:
        raise PreconditionError(f"cap must be positive, got {cap}")
    return _count_paths(G, phi, _class_graphs(phi), u, v, cap, super_only,
                        budget or SearchBudget())


def _count_paths(G: Graph, phi: EdgeColouring, classes: Dict[int, nx.Graph], u: int, v: int,
                 cap: int, super_only: bool, budget: SearchBudget) -> Tuple[int, PathSystem]:
    pair = (min(u, v), max(u, v))
    candidates = _enumerate_paths(classes, u, v, super_only, budget.max_paths)
    if not candidates:
        return 0, PathSystem(pair)

    limit = min(cap, len(candidates), _per_colour_bound(classes, u, v, super_only))
    if limit > 1:
        limit = min(limit, relaxed_upper_bound(G, phi, u, v, super_only))

    counter = SearchCounter(budget, "count_disjoint_mono_paths")
    best: List[int] = []
    chosen: List[int] = []

    def optimistic(start: int, used: int) -> int:
        compatible = 0
        direct = 0
        union = 0
        for j in range(start, len(candidates)):
            mask = candidates[j].mask
            if mask & used == 0:
                compatible += 1
                if mask == 0:
                    direct = 1
                union |= mask
        return min(compatible, direct + bin(union).count("1"))

    def search(start: int, used: int) -> bool:
        counter.tick()
        if len(chosen) > len(best):
            best[:] = chosen
            if len(best) >= limit:
                return True
        if len(chosen) + optimistic(start, used) <= len(best):
            return False
        for j in range(start, len(candidates)):
            mask = candidates[j].mask
            if mask & used:
                continue
            chosen.append(j)
            if search(j + 1, used | mask):
                return True
            chosen.pop()
        return False

    search(0, 0)
    picked = [candidates[j] for j in best]
    witness = PathSystem(
        pair,
        tuple(c.path if c.path[0] == pair[0] else tuple(reversed(c.path)) for c in picked),
        tuple(c.colour for c in picked))
    return len(best), witness


def is_monochromatic_k_connected(G: Graph, phi: EdgeColouring, k: int,
                                 keep_witnesses: bool = False,
                                 budget: Optional[SearchBudget] = None) -> VerifyReport:
    """
    Check that every vertex pair has k disjoint monochromatic paths.

    Args:
        G: Graph with n >= k + 1
        phi: Colouring of G
        k: Target number of paths
        keep_witnesses: Store the path system found for each pair
        budget: Limits passed to the per-pair search

    Returns:
        VerifyReport; on failure the first failing pair in sorted order
    """
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    if G.n < k + 1:
        raise PreconditionError(f"Monochromatic {k}-connectivity needs n >= {k + 1}, got n={G.n}")

    budget = budget or SearchBudget()
    classes = _class_graphs(phi)
    witnesses: Dict[Edge, PathSystem] = {}
    checked = 0
    for u in range(G.n):
        for v in range(u + 1, G.n):
            count, witness = _count_paths(G, phi, classes, u, v, k, False, budget)
            checked += 1
            if keep_witnesses:
                witnesses[(u, v)] = witness
            if count < k:
                log.debug("Pair (%d, %d) has only %d disjoint monochromatic paths", u, v, count)
                return VerifyReport(k, False, checked, witnesses, (u, v), count)
    return VerifyReport(k, True, checked, witnesses)


def superpath_profile(G: Graph, phi: EdgeColouring,
                      budget: Optional[SearchBudget] = None) -> PairFunction:
    """
    Exact number of disjoint monochromatic super-paths for every pair.

    Each pair is solved independently with cap m_G(u, v).
    """
    if G.n < 3:
        raise PreconditionError(f"Super-path profile needs n >= 3, got n={G.n}")
    budget = budget or SearchBudget()
    classes = _class_graphs(phi)
    values = []
    for u in range(G.n):
        for v in range(u + 1, G.n):
            cap = m_of(G, u, v)
            count = 0
            if cap > 0:
                count, _ = _count_paths(G, phi, classes, u, v, cap, True, budget)
            values.append(((u, v), count))
    return PairFunction(G.n, tuple(values))


def check_superpath_bound(G: Graph, phi: EdgeColouring,
                          budget: Optional[SearchBudget] = None) -> SuperpathBoundReport:
    """
    Evaluate e(G) >= ceil(w(f)/(n-2)) + r - 1 with f the exact super-path profile.

    A false `holds` means an implementation bug; the report keeps the profile.
    For one colour with equality, `degree_spread_ok` records whether
    max degree - min degree <= 1.
    """
    if G.n < 3:
        raise PreconditionError(f"Super-path bound needs n >= 3, got n={G.n}")
    profile = superpath_profile(G, phi, budget)
    w = weight(profile)
    rhs = (w + G.n - 3) // (G.n - 2) + phi.r - 1
    tight = G.e == rhs
    spread_ok = None
    if tight and phi.r == 1 and G.e >= 1:
        spread_ok = G.max_degree - G.min_degree <= 1
    if G.e < rhs:
        log.error("Super-path bound violated: e=%d < %d (w=%d, r=%d)", G.e, rhs, w, phi.r)
    return SuperpathBoundReport(G.e >= rhs, G.e, rhs, w, phi.r, tight, spread_ok, profile)
