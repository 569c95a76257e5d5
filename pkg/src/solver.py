"""
Exact monochromatic k-connection numbers.
Lower bounds from minimum spanning subgraphs, closed-form upper bounds, and a
branch-and-bound over partitions of E(G) into connected colour classes.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple
import logging

import networkx as nx

from src.bounds import mc1_bounds, mck_upper_bound
from src.colouring import EdgeColouring, canonicalize, colour_class
from src.config import SearchBudget, SearchCounter
from src.connectivity import (require_k_connected, enumerate_min_spanning_k_connected,
                              local_connectivity, min_spanning_k_connected)
from src.constructions import lower_bound_colouring, spanning_tree_colouring
from src.errors import BudgetExceededError
from src.graph import Edge, Graph
from src.verify import is_monochromatic_k_connected

log = logging.getLogger(__name__)

STATUS_EXACT = "exact"
STATUS_SHORTCUT = "shortcut"
STATUS_BUDGET = "budget-exceeded"


@dataclass(frozen=True)
class LowerBound:
    """e(G) - e(H) + 1 with its witness; `optimal` is False when H is only inclusion-minimal."""

    value: int
    witness: EdgeColouring
    subgraph: Graph
    optimal: bool


@dataclass(frozen=True)
class BoundsReport:
    """Bounds on mc_k(G) with their provenance, and the exact value when known."""

    k: int
    lower: int
    lower_source: str
    upper: int
    upper_source: str
    exact: Optional[int] = None
    witness: Optional[EdgeColouring] = None
    status: str = STATUS_BUDGET
    nodes_expanded: int = 0
    message: str = ""


def mck_lower_bound(G: Graph, k: int, budget: Optional[SearchBudget] = None) -> LowerBound:
    """
    Lower bound e(G) - e(H) + 1 from a minimum spanning k-connected subgraph H.

    Args:
        G: k-connected graph
        k: Connectivity
        budget: Limits for the subgraph search

    Returns:
        LowerBound; when the subgraph search runs out of budget the best
        subgraph found is used and `optimal` is False
    """
    budget = budget or SearchBudget()
    require_k_connected(G, k)
    if k == 1:
        witness = spanning_tree_colouring(G)
        tree = colour_class(G, witness, 1)
        return LowerBound(G.e - tree.e + 1, witness, tree, True)

    optimal = True
    try:
        H = min_spanning_k_connected(G, k, budget)
    except BudgetExceededError as exc:
        if exc.best is None:
            raise
        log.info("Subgraph search over budget, using an inclusion-minimal subgraph: %s", exc)
        H = exc.best
        optimal = False
    witness = lower_bound_colouring(G, H, k)
    return LowerBound(G.e - H.e + 1, witness, H, optimal)


class _PartitionSearch:
    """
    Branch and bound over partitions of E(G) into connected classes.

    Classes are opened in order of their smallest edge, so labels come out
    canonical. Ties with the incumbent are explored to keep the
    lexicographically smallest optimal colouring.
    """

    def __init__(self, G: Graph, k: int, budget: SearchBudget,
                 incumbent: Optional[EdgeColouring]):
        self.G = G
        self.k = k
        self.budget = budget
        self.counter = SearchCounter(budget, "mck_exact")
        self.best_value = incumbent.r if incumbent else 0
        self.best_labels: Optional[Tuple[int, ...]] = incumbent.labels if incumbent else None

        self.touching: List[FrozenSet[int]] = [
            frozenset(j for j, (a, b) in enumerate(G.edges) if j != i and {a, b} & {u, v})
            for i, (u, v) in enumerate(G.edges)]

        self.labels = [0] * G.e
        self.count = 0
        self.uncovered = set(range(G.e))
        self.degree_uncovered = G.degrees()
        self.support = [[0] * G.n for _ in range(G.n)]
        self._tables: Dict[FrozenSet[int], Dict[Edge, int]] = {}

    def run(self) -> Tuple[int, Optional[EdgeColouring]]:
        self._search()
        witness = EdgeColouring(self.G, self.best_labels) if self.best_labels else None
        return self.best_value, witness

    def _class_table(self, members: FrozenSet[int]) -> Dict[Edge, int]:
        """Local connectivity inside one colour class, for every pair it spans."""
        table = self._tables.get(members)
        if table is None:
            edges = [self.G.edges[j] for j in members]
            if len(edges) == 1:
                table = {edges[0]: 1}
            else:
                spanned = sorted({x for e in edges for x in e})
                table = {(a, b): local_connectivity(edges, a, b)
                         for i, a in enumerate(spanned) for b in spanned[i + 1:]}
            self._tables[members] = table
        return table

    def _pairs_feasible(self) -> bool:
        """Every pair can still reach k paths: fixed classes plus the uncovered edges at both ends."""
        n = self.G.n
        for u in range(n):
            du = self.degree_uncovered[u]
            row = self.support[u]
            for v in range(u + 1, n):
                if row[v] + min(du, self.degree_uncovered[v]) < self.k:
                    return False
        return True

    def _connected_classes(self, first: int) -> List[FrozenSet[int]]:
        """Connected sets of uncovered edges containing `first`, smallest first."""
        start = frozenset([first])
        seen = {start}
        stack = [start]
        while stack:
            current = stack.pop()
            frontier = set()
            for j in current:
                frontier |= self.touching[j]
            frontier &= self.uncovered
            frontier -= current
            for j in frontier:
                grown = current | {j}
                if grown not in seen:
                    seen.add(grown)
                    stack.append(grown)
        return sorted(seen, key=lambda s: (len(s), sorted(s)))

    def _apply(self, members: FrozenSet[int], sign: int) -> None:
        for j in members:
            u, v = self.G.edges[j]
            self.degree_uncovered[u] -= sign
            self.degree_uncovered[v] -= sign
        for (a, b), value in self._class_table(members).items():
            self.support[a][b] += sign * value
        if sign > 0:
            self.count += 1
            self.uncovered -= members
            for j in members:
                self.labels[j] = self.count
        else:
            for j in members:
                self.labels[j] = 0
            self.uncovered |= members
            self.count -= 1

    def _leaf(self) -> None:
        labels = tuple(self.labels)
        better = self.count > self.best_value
        tie = self.count == self.best_value and (self.best_labels is None or labels < self.best_labels)
        if not (better or tie):
            return
        phi = EdgeColouring(self.G, labels)
        if is_monochromatic_k_connected(self.G, phi, self.k, budget=self.budget).ok:
            if better:
                log.debug("New incumbent: %d colours after %d nodes", self.count, self.counter.nodes)
            self.best_value = self.count
            self.best_labels = labels

    def _search(self) -> None:
        self.counter.tick(best=self.best_value)
        if not self.uncovered:
            self._leaf()
            return
        if self.count + len(self.uncovered) < self.best_value:
            return
        if not self._pairs_feasible():
            return

        first = min(self.uncovered)
        for members in self._connected_classes(first):
            if self.count + 1 + len(self.uncovered) - len(members) < self.best_value:
                break
            self._apply(members, +1)
            self._search()
            self._apply(members, -1)


def mck_exact(G: Graph, k: int, budget: Optional[SearchBudget] = None) -> BoundsReport:
    """
    mc_k(G) with a witness colouring, or bounds only when the budget runs out.

    Args:
        G: k-connected graph
        k: Connectivity (k = 1 gives mc(G))
        budget: Edge limits, node and time limits, shortcut switch

    Returns:
        BoundsReport; `exact` and `witness` are set unless status is budget-exceeded
    """
    budget = budget or SearchBudget()
    require_k_connected(G, k)

    lower = mck_lower_bound(G, k, budget)
    lower_source = ("spanning tree colouring" if k == 1 else "lower-bound colouring") + \
        (" over a minimum spanning subgraph" if lower.optimal else
         " over an inclusion-minimal subgraph (search budget exceeded)")
    upper, upper_source = _upper(G, k, budget)

    if budget.shortcut_allowed and lower.value == upper and G.e <= budget.max_shortcut_edges:
        return BoundsReport(k, lower.value, lower_source, upper, upper_source,
                            exact=lower.value, witness=canonicalize(lower.witness),
                            status=STATUS_SHORTCUT)

    if G.e > budget.max_edges:
        return BoundsReport(k, lower.value, lower_source, upper, upper_source,
                            message=f"Full search limited to e <= {budget.max_edges}, got e={G.e}")

    search = _PartitionSearch(G, k, budget, canonicalize(lower.witness))
    try:
        value, witness = search.run()
    except BudgetExceededError as exc:
        found = max(lower.value, search.best_value)
        source = lower_source if found == lower.value else "partial branch-and-bound incumbent"
        return BoundsReport(k, found, source, upper, upper_source,
                            nodes_expanded=search.counter.nodes, message=str(exc))

    log.info("mc_%d = %d after %d search nodes", k, value, search.counter.nodes)
    return BoundsReport(k, lower.value, lower_source, upper, upper_source,
                        exact=value, witness=witness, status=STATUS_EXACT,
                        nodes_expanded=search.counter.nodes)


def _upper(G: Graph, k: int, budget: SearchBudget) -> Tuple[int, str]:
    if k > 1:
        return mck_upper_bound(G, k), "e - ceil((k C(n,2) - e) / (n - 2)) + 1"
    try:
        _, upper = mc1_bounds(G, budget)
    except BudgetExceededError:
        greedy = max(nx.greedy_color(G.to_networkx(), strategy='largest_first').values()) + 1
        return G.e - G.n + greedy, "e - n + greedy colour count"
    return upper, "e - n + chi(G)"


def h_k_value(G: Graph, k: int, budget: Optional[SearchBudget] = None) -> int:
    """
    max mc_k(H) over the minimum spanning k-connected subgraphs H of G.

    Args:
        G: k-connected graph
        k: Connectivity
        budget: Limits for the enumeration and each exact solve

    Returns:
        h_k(G)
    """
    budget = budget or SearchBudget()
    best = 0
    for H in enumerate_min_spanning_k_connected(G, k, budget):
        report = mck_exact(H, k, budget)
        if report.exact is None:
            raise BudgetExceededError(f"h_k: could not solve a minimum subgraph ({report.message})")
        best = max(best, report.exact)
    return best
