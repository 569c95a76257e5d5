"""
Theorem and conjecture sweeps for monok.
Each suite builds a list of instances, evaluates them (optionally on a
worker pool) and collects the records into a CheckReport.
"""
from collections import Counter
from dataclasses import dataclass, field, replace
from multiprocessing import Pool
from typing import Callable, Dict, Iterable, List, Optional, Tuple
import logging
import random

from tqdm import tqdm

from src.bounds import (bipartite_prediction, ceil_div, complete_bipartite_bounds,
                        complete_graph_bounds, small_k_prediction)
from src.colouring import EdgeColouring
from src.config import SearchBudget
from src.connectivity import is_k_connected, min_spanning_k_connected
from src.constructions import (bipartite_harary, harary, random_colouring, random_graph,
                               random_supergraph)
from src.errors import BudgetExceededError
from src.graph import Graph, complete_bipartite_graph, complete_graph, cycle_graph
from src.ingest import GraphFormat, serialize_colouring, serialize_graph
from src.solver import h_k_value, mck_exact
from src.verify import check_superpath_bound

log = logging.getLogger(__name__)

MATCH = "match"
MISMATCH = "mismatch"
BUDGET = "budget-exceeded"

THEOREM = "theorem"
EVIDENCE = "evidence"


@dataclass(frozen=True)
class Instance:
    """One graph to evaluate; `params` are suite specific."""

    suite: str
    index: int
    descriptor: str
    graph: Graph
    k: int
    params: Tuple = ()


@dataclass(frozen=True)
class InstanceRecord:
    """Expected against computed value for one instance."""

    index: int
    descriptor: str
    graph6: str
    k: int
    expected: Optional[int]
    provenance: str
    lower: Optional[int]
    upper: Optional[int]
    computed: Optional[int]
    status: str
    witness: Optional[Tuple[int, ...]] = None
    counterexample: Optional[Dict[str, str]] = None
    note: str = ""


@dataclass
class CheckReport:
    """Outcome of a sweep: every record in instance order, plus counts."""

    suite: str
    kind: str
    parameters: Dict = field(default_factory=dict)
    records: List[InstanceRecord] = field(default_factory=list)

    @property
    def summary(self) -> Dict[str, int]:
        counts = Counter(r.status for r in self.records)
        return {
            "instances": len(self.records),
            MATCH: counts.get(MATCH, 0),
            MISMATCH: counts.get(MISMATCH, 0),
            BUDGET: counts.get(BUDGET, 0),
        }

    @property
    def failed(self) -> bool:
        """Only theorem suites fail; conjecture suites report evidence."""
        return self.kind == THEOREM and self.summary[MISMATCH] > 0

    @property
    def verdict(self) -> str:
        if self.kind == EVIDENCE:
            return EVIDENCE
        return "fail" if self.failed else "pass"


def pbar(it: Iterable, total: Optional[int] = None, desc: Optional[str] = None,
         verbose: bool = True) -> Iterable:
    """Wrap an iterable in a stderr progress bar when verbose."""
    if verbose:
        bf = '{l_bar}{bar}| {n_fmt}/{total_fmt} ({elapsed}<{remaining})'
        return tqdm(it, total=total, ncols=80, desc=desc, leave=True, bar_format=bf)
    return it


def _bundle(G: Graph, phi: Optional[EdgeColouring]) -> Dict[str, str]:
    bundle = {"graph6": serialize_graph(G, GraphFormat.GRAPH6).strip()}
    if phi is not None:
        bundle["colouring"] = serialize_colouring(phi)
    return bundle


def _record(instance: Instance, expected: Optional[int], provenance: str,
            lower: Optional[int], upper: Optional[int], computed: Optional[int],
            status: str, witness: Optional[EdgeColouring] = None, note: str = "") -> InstanceRecord:
    G = instance.graph
    return InstanceRecord(
        index=instance.index,
        descriptor=instance.descriptor,
        graph6=serialize_graph(G, GraphFormat.GRAPH6).strip(),
        k=instance.k,
        expected=expected,
        provenance=provenance,
        lower=lower,
        upper=upper,
        computed=computed,
        status=status,
        witness=witness.labels if witness is not None else None,
        counterexample=_bundle(G, witness) if status == MISMATCH else None,
        note=note,
    )


def _solve_against(instance: Instance, budget: SearchBudget, expected: Optional[int],
                   provenance: str, lower: Optional[int] = None,
                   upper: Optional[int] = None) -> InstanceRecord:
    """
    Run mck_exact and compare: against `expected` when it is proven, else
    against the interval [lower, upper].
    """
    report = mck_exact(instance.graph, instance.k, budget)
    if report.exact is None:
        return _record(instance, expected, provenance, report.lower, report.upper, None,
                       BUDGET, note=report.message)

    if expected is not None:
        ok = report.exact == expected
    elif lower is not None and upper is not None:
        ok = lower <= report.exact <= upper
    else:
        ok = report.lower <= report.exact <= report.upper
    if not ok:
        log.error("%s: expected %s, computed %d", instance.descriptor,
                  expected if expected is not None else f"[{lower}, {upper}]", report.exact)
    return _record(instance, expected, provenance,
                   lower if lower is not None else report.lower,
                   upper if upper is not None else report.upper,
                   report.exact, MATCH if ok else MISMATCH, report.witness,
                   note=report.status)


def _eval_small_k(instance: Instance, budget: SearchBudget) -> InstanceRecord:
    G, k = instance.graph, instance.k
    (e_h,) = instance.params
    expected = small_k_prediction(G, k, e_h)
    return _solve_against(instance, budget, expected, "e(G) - ceil(kn/2) + 1")


def _eval_bipartite(instance: Instance, budget: SearchBudget) -> InstanceRecord:
    G, k = instance.graph, instance.k
    s, t = instance.params
    expected = bipartite_prediction(G, s, t, k, k * t)
    return _solve_against(instance, budget, expected, "e(G) - kt + 1")


def _eval_complete(instance: Instance, budget: SearchBudget) -> InstanceRecord:
    (n,) = instance.params
    bounds = complete_graph_bounds(n, instance.k)
    provenance = bounds.lower_source if bounds.exact is not None else \
        f"interval [{bounds.lower_source}, {bounds.upper_source}]"
    return _solve_against(instance, budget, bounds.exact, provenance, bounds.lower, bounds.upper)


def _eval_complete_bipartite(instance: Instance, budget: SearchBudget) -> InstanceRecord:
    s, t = instance.params
    bounds = complete_bipartite_bounds(s, t, instance.k)
    provenance = bounds.lower_source if bounds.exact is not None else \
        f"interval [{bounds.lower_source}, {bounds.upper_source}]"
    return _solve_against(instance, budget, bounds.exact, provenance, bounds.lower, bounds.upper)


def _eval_min_edge(instance: Instance, budget: SearchBudget) -> InstanceRecord:
    return _solve_against(instance, budget, 1, "minimum-edge k-connected graph: mc_k = 1")


def _eval_superpath(instance: Instance, budget: SearchBudget) -> InstanceRecord:
    (seed, r) = instance.params
    G = instance.graph
    phi = random_colouring(G, r, seed=seed)
    report = check_superpath_bound(G, phi, budget)
    ok = report.holds and report.degree_spread_ok is not False
    note = f"w={report.weight}, r={report.r}" + (", tight" if report.tight else "")
    if report.degree_spread_ok is False:
        note += ", degree spread > 1"
    return _record(instance, report.rhs, "ceil(w(f)/(n-2)) + r - 1 <= e(G)",
                   report.rhs, None, report.lhs, MATCH if ok else MISMATCH,
                   phi if not ok else None, note=note)


def _eval_conjecture(instance: Instance, budget: SearchBudget) -> InstanceRecord:
    G, k = instance.graph, instance.k
    H = min_spanning_k_connected(G, k, budget)
    h_k = h_k_value(G, k, budget)
    predicted = G.e - H.e + h_k
    record = _solve_against(instance, budget, predicted, "e(G) - e(H) + h_k(G)")
    if record.status == BUDGET:
        return record
    note = f"e(H)={H.e}, h_k={h_k}"
    return replace(record, note=note)


EVALUATORS: Dict[str, Callable[[Instance, SearchBudget], InstanceRecord]] = {
    "thm-small-k": _eval_small_k,
    "thm-bip-small-k": _eval_bipartite,
    "thm-Kn": _eval_complete,
    "thm-Kst": _eval_complete_bipartite,
    "thm-min-edge": _eval_min_edge,
    "ineq-superpath": _eval_superpath,
    "conj-evidence": _eval_conjecture,
}

SUITE_KINDS: Dict[str, str] = {suite: THEOREM for suite in EVALUATORS}
SUITE_KINDS["conj-evidence"] = EVIDENCE


def _evaluate(task: Tuple[Instance, SearchBudget]) -> InstanceRecord:
    instance, budget = task
    try:
        return EVALUATORS[instance.suite](instance, budget)
    except BudgetExceededError as exc:
        log.info("%s: %s", instance.descriptor, exc)
        return _record(instance, None, "", None, None, None, BUDGET, note=str(exc))


def _small_k_instances(params: Dict, rng: random.Random) -> List[Instance]:
    instances = []
    for k in params["k"]:
        for n in range(k + 1, params["n_max"] + 1):
            base = harary(n, k)
            for extra in params["extra_edges"]:
                G = random_supergraph(base, extra, seed=rng.randrange(2 ** 32))
                instances.append(Instance("thm-small-k", 0, f"H_({n},{k}) + {G.e - base.e} edges",
                                          G, k, (base.e,)))
    return instances


def _bipartite_instances(params: Dict, rng: random.Random) -> List[Instance]:
    instances = []
    for k in params["k"]:
        for s in range(k, params["t_max"] + 1):
            for t in range(s, params["t_max"] + 1):
                instances.append(Instance("thm-bip-small-k", 0, f"K_({s},{t})",
                                          complete_bipartite_graph(s, t), k, (s, t)))
                H = bipartite_harary(s, t, k)
                if H.e < s * t:
                    instances.append(Instance("thm-bip-small-k", 0, f"H_({s},{t},{k})",
                                              H, k, (s, t)))
    return instances


def _complete_instances(params: Dict, rng: random.Random) -> List[Instance]:
    return [Instance("thm-Kn", 0, f"K_{n}", complete_graph(n), k, (n,))
            for k in params["k"] for n in range(k + 1, params["n_max"] + 1)]


def _complete_bipartite_instances(params: Dict, rng: random.Random) -> List[Instance]:
    return [Instance("thm-Kst", 0, f"K_({s},{t})", complete_bipartite_graph(s, t), k, (s, t))
            for k in params["k"]
            for s in range(k, params["t_max"] + 1)
            for t in range(s, params["t_max"] + 1)]


def _min_edge_instances(params: Dict, rng: random.Random) -> List[Instance]:
    instances = [Instance("thm-min-edge", 0, f"C_{n}", cycle_graph(n), 2)
                 for n in range(params["cycle_min"], params["cycle_max"] + 1)]
    for k in params["harary_k"]:
        for n in range(k + 1, params["n_max"] + 1):
            instances.append(Instance("thm-min-edge", 0, f"H_({n},{k})", harary(n, k), k))
    return instances


def _superpath_instances(params: Dict, rng: random.Random) -> List[Instance]:
    instances = []
    densities = params["densities"]
    while len(instances) < params["count"]:
        n = rng.randint(3, params["max_vertices"])
        p = densities[len(instances) % len(densities)]
        G = random_graph(n, p, seed=rng.randrange(2 ** 32))
        if G.e == 0:
            continue
        r = ceil_div(G.e, params["colour_divisor"])
        instances.append(Instance("ineq-superpath", 0, f"G({n},{p}) r<={r}", G, 1,
                                  (rng.randrange(2 ** 32), r)))
    return instances


def _conjecture_instances(params: Dict, rng: random.Random) -> List[Instance]:
    instances = []
    for k in params["k"]:
        for n in range(k + 1, params["n_max"] + 1):
            instances.append(Instance("conj-evidence", 0, f"K_{n}", complete_graph(n), k))
        for s in range(k, params["t_max"] + 1):
            for t in range(s, params["t_max"] + 1):
                instances.append(Instance("conj-evidence", 0, f"K_({s},{t})",
                                          complete_bipartite_graph(s, t), k))
        drawn = 0
        for _ in range(200 * params["random"]):
            if drawn == params["random"]:
                break
            n = rng.randint(k + 2, params["n_max"] + 1)
            G = random_graph(n, params["density"], seed=rng.randrange(2 ** 32))
            if G.e <= params["max_edges"] and is_k_connected(G, k):
                drawn += 1
                instances.append(Instance("conj-evidence", 0, f"G({n},{params['density']}) #{drawn}",
                                          G, k))
    return instances


BUILDERS: Dict[str, Callable[[Dict, random.Random], List[Instance]]] = {
    "thm-small-k": _small_k_instances,
    "thm-bip-small-k": _bipartite_instances,
    "thm-Kn": _complete_instances,
    "thm-Kst": _complete_bipartite_instances,
    "thm-min-edge": _min_edge_instances,
    "ineq-superpath": _superpath_instances,
    "conj-evidence": _conjecture_instances,
}


def suite_parameters(config: Dict, suite: str, **overrides) -> Dict:
    """Suite section of the config, with the fuzz section folded into ineq-superpath."""
    params = dict(config.get("fuzz", {})) if suite == "ineq-superpath" else {}
    params.update(config.get("suites", {}).get(suite, {}))
    params.update({k: v for k, v in overrides.items() if v is not None})
    return params


def build_instances(suite: str, params: Dict, seed: int = 0) -> List[Instance]:
    """
    Instances of a suite in their fixed order.

    Args:
        suite: Suite id
        params: Suite parameters (see config.json `suites`)
        seed: Seed for the random suites

    Returns:
        Indexed instance list
    """
    if suite not in BUILDERS:
        raise KeyError(f"Unknown suite {suite!r}; choose from {sorted(BUILDERS)}")
    rng = random.Random(seed)
    built = BUILDERS[suite](params, rng)
    return [Instance(i.suite, index, i.descriptor, i.graph, i.k, i.params)
            for index, i in enumerate(built)]


def run_suite(suite: str, params: Dict, budget: Optional[SearchBudget] = None,
              seed: int = 0, workers: int = 1, verbose: bool = True) -> CheckReport:
    """
    Evaluate every instance of a suite.

    Args:
        suite: Suite id
        params: Suite parameters
        budget: Search limits per instance
        seed: Seed for instance generation and random colourings
        workers: Pool size; 1 runs in-process
        verbose: Show a progress bar on stderr

    Returns:
        CheckReport with records in instance order
    """
    budget = budget or SearchBudget()
    instances = build_instances(suite, params, seed)
    log.info("Suite %s: %d instances, %d worker(s)", suite, len(instances), workers)
    tasks = [(instance, budget) for instance in instances]

    if workers > 1 and len(tasks) > 1:
        with Pool(workers) as pool:
            records = list(pbar(pool.imap(_evaluate, tasks), total=len(tasks),
                                desc=suite, verbose=verbose))
    else:
        records = [_evaluate(task) for task in pbar(tasks, total=len(tasks),
                                                    desc=suite, verbose=verbose)]

    report = CheckReport(suite, SUITE_KINDS[suite], dict(params, seed=seed), records)
    log.info("Suite %s: %s", suite, report.summary)
    return report
