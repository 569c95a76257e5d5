"""
monok - Monochromatic k-Connection Toolkit
Command-line front end: verify, solve, construct, check.
"""
from typing import List, Optional
import argparse
import logging
import sys
import time

from src.config import SearchBudget, load_config
from src.connectivity import min_spanning_k_connected
from src.constructions import bipartite_harary, harary, lower_bound_colouring, regular_bipartite
from src.errors import BudgetExceededError, MonokError
from src.ingest import (GraphFormat, read_colouring, read_graph, serialize_colouring,
                        serialize_graph, write_colouring)
from src.reports import (bounds_report_dict, check_report_dict, dump_json, export_table,
                         print_bounds_summary, print_check_summary, superpath_report_dict,
                         verify_report_dict)
from src.solver import STATUS_BUDGET, mck_exact
from src.suites import BUILDERS, run_suite, suite_parameters
from src.verify import check_superpath_bound, is_monochromatic_k_connected

log = logging.getLogger("monok")

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _int_list(text: str) -> List[int]:
    return [int(x) for x in text.split(',') if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', default='config.json', help='Configuration file')
    common.add_argument('--verbose', action='store_true', help='Debug logging on stderr')
    common.add_argument('--format', choices=['g6', 'edges'], default=None,
                        help='Graph format (default: from extension, or sniffed on stdin)')

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument('--budget-edges', type=int, default=None,
                        help='Largest e(G) for the full exact search')
    budget.add_argument('--budget-nodes', type=int, default=None,
                        help='Search nodes before giving up')
    budget.add_argument('--timeout-sec', type=float, default=None,
                        help='Wall-clock limit per search')
    budget.add_argument('--no-shortcut', action='store_true',
                        help='Always run the full search, even when the bounds meet')

    parser = argparse.ArgumentParser(
        prog='monok', description='Monochromatic k-connected edge-colourings')
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', parents=[common, budget],
                                 help='Check a colouring for monochromatic k-connectivity')
    verify.add_argument('-g', '--graph', required=True, help='Graph file ("-" for stdin)')
    verify.add_argument('-c', '--colouring', required=True, help='Colouring CSV (u,v,colour)')
    verify.add_argument('-k', type=int, default=None, help='Required number of disjoint paths')
    verify.add_argument('--witnesses', action='store_true',
                        help='Include the path system of every pair in the report')
    verify.add_argument('--superpath', action='store_true',
                        help='Evaluate the super-path weight inequality instead')

    solve = commands.add_parser('solve', parents=[common, budget],
                                help='Bounds and exact value of mc_k(G)')
    solve.add_argument('-g', '--graph', required=True, help='Graph file ("-" for stdin)')
    solve.add_argument('-k', type=int, required=True)
    solve.add_argument('--witness-out', default=None, help='Write the witness colouring CSV here')

    construct = commands.add_parser('construct', parents=[common],
                                    help='Emit an extremal graph or colouring')
    construct.add_argument('kind', choices=['harary', 'regbip', 'bipharary', 'lowerbound'])
    construct.add_argument('--n', type=int, default=None)
    construct.add_argument('--s', type=int, default=None)
    construct.add_argument('--t', type=int, default=None)
    construct.add_argument('-k', type=int, default=None)
    construct.add_argument('-g', '--graph', default=None, help='Host graph for lowerbound')
    construct.add_argument('--subgraph', default=None,
                           help='Spanning subgraph H for lowerbound (default: a minimum one)')

    check = commands.add_parser('check', parents=[common, budget],
                                help='Run a theorem or conjecture sweep')
    check.add_argument('suite', choices=sorted(BUILDERS))
    check.add_argument('--seed', type=int, default=0)
    check.add_argument('--workers', type=int, default=None)
    check.add_argument('--table-out', default=None, help='Write the text table and a CSV sidecar')
    check.add_argument('--k-values', type=_int_list, default=None, help='Comma-separated k values')
    check.add_argument('--n-max', type=int, default=None)
    check.add_argument('--t-max', type=int, default=None)
    check.add_argument('--count', type=int, default=None, help='Instances for ineq-superpath')
    check.add_argument('--no-progress', action='store_true')
    return parser


def _budget(config: dict, args: argparse.Namespace) -> SearchBudget:
    budget = SearchBudget.from_config(config['budget'])
    return budget.override(
        max_edges=getattr(args, 'budget_edges', None),
        max_nodes_expanded=getattr(args, 'budget_nodes', None),
        timeout_sec=getattr(args, 'timeout_sec', None),
        shortcut_allowed=False if getattr(args, 'no_shortcut', False) else None,
    )


def _format(args: argparse.Namespace) -> Optional[GraphFormat]:
    return GraphFormat.from_flag(args.format) if args.format else None


def cmd_verify(args: argparse.Namespace, budget: SearchBudget) -> int:
    log.info("[2/4] Reading %s and %s...", args.graph, args.colouring)
    G = read_graph(args.graph, _format(args))
    phi = read_colouring(args.colouring, G)
    log.info("Graph n=%d e=%d, colouring r=%d", G.n, G.e, phi.r)

    if args.superpath:
        log.info("[3/4] Evaluating the super-path inequality...")
        report = check_superpath_bound(G, phi, budget)
        log.info("[4/4] Writing report...")
        sys.stdout.write(dump_json(superpath_report_dict(report, G)))
        return EXIT_OK if report.holds else EXIT_FALSE

    if args.k is None:
        raise MonokError("verify needs -k (or --superpath)")
    log.info("[3/4] Checking monochromatic %d-connectivity...", args.k)
    report = is_monochromatic_k_connected(G, phi, args.k, keep_witnesses=args.witnesses,
                                          budget=budget)
    log.info("[4/4] Writing report...")
    sys.stdout.write(dump_json(verify_report_dict(report, G)))
    if not report.ok:
        u, v = report.failing_pair
        log.warning("Pair (%d, %d) has only %d disjoint monochromatic paths",
                    u, v, report.failing_count)
        return EXIT_FALSE
    return EXIT_OK


def cmd_solve(args: argparse.Namespace, budget: SearchBudget) -> int:
    log.info("[2/4] Reading %s...", args.graph)
    G = read_graph(args.graph, _format(args))
    log.info("[3/4] Solving mc_%d for n=%d e=%d...", args.k, G.n, G.e)
    report = mck_exact(G, args.k, budget)
    print_bounds_summary(report)

    log.info("[4/4] Writing report...")
    sys.stdout.write(dump_json(bounds_report_dict(report, G)))
    if args.witness_out and report.witness is not None:
        write_colouring(report.witness, args.witness_out)
        log.info("Witness written to %s", args.witness_out)
    if report.status == STATUS_BUDGET:
        log.warning("Budget exceeded: %s", report.message)
        return EXIT_BUDGET
    return EXIT_OK


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" if len(name) > 1 else f"-{name}"
               for name in names if getattr(args, name) is None]
    if missing:
        raise MonokError(f"construct {args.kind} needs {', '.join(missing)}")


def cmd_construct(args: argparse.Namespace, budget: SearchBudget) -> int:
    fmt = _format(args) or GraphFormat.GRAPH6
    log.info("[2/4] Building %s...", args.kind)
    if args.kind == 'harary':
        _require(args, 'n', 'k')
        G = harary(args.n, args.k)
    elif args.kind == 'regbip':
        _require(args, 's', 'k')
        G = regular_bipartite(args.s, args.k)
    elif args.kind == 'bipharary':
        _require(args, 's', 't', 'k')
        G = bipartite_harary(args.s, args.t, args.k)
    else:
        _require(args, 'graph', 'k')
        G = read_graph(args.graph, _format(args))
        if args.subgraph:
            H = read_graph(args.subgraph, _format(args))
        else:
            H = min_spanning_k_connected(G, args.k, budget)
        phi = lower_bound_colouring(G, H, args.k)
        log.info("[4/4] Lower-bound colouring with %d colours", phi.r)
        sys.stdout.write(serialize_graph(G, fmt))
        sys.stdout.write(serialize_colouring(phi))
        return EXIT_OK

    log.info("[4/4] n=%d e=%d", G.n, G.e)
    sys.stdout.write(serialize_graph(G, fmt))
    return EXIT_OK


def cmd_check(args: argparse.Namespace, budget: SearchBudget, config: dict) -> int:
    params = suite_parameters(config, args.suite, k=args.k_values, n_max=args.n_max,
                              t_max=args.t_max, count=args.count)
    workers = args.workers if args.workers is not None else config.get('workers', 1)
    log.info("[2/4] Running suite %s...", args.suite)
    report = run_suite(args.suite, params, budget, seed=args.seed, workers=workers,
                       verbose=not args.no_progress)

    log.info("[3/4] Rendering tables...")
    print_check_summary(report)
    if args.table_out:
        sidecar = export_table(report, args.table_out)
        log.info("Table written to %s (CSV: %s)", args.table_out, sidecar)

    log.info("[4/4] Writing report...")
    sys.stdout.write(dump_json(check_report_dict(report)))
    return EXIT_FALSE if report.failed else EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    start_time = time.time()

    log.info("[1/4] Loading configuration...")
    config = load_config(args.config)
    try:
        budget = _budget(config, args)
        if args.command == 'verify':
            code = cmd_verify(args, budget)
        elif args.command == 'solve':
            code = cmd_solve(args, budget)
        elif args.command == 'construct':
            code = cmd_construct(args, budget)
        else:
            code = cmd_check(args, budget, config)
    except BudgetExceededError as e:
        log.error("Budget exceeded: %s", e)
        return EXIT_BUDGET
    except (MonokError, OSError, ValueError) as e:
        log.error("%s", e)
        return EXIT_INPUT

    log.info("Completed in %.2f seconds", time.time() - start_time)
    return code


if __name__ == "__main__":
    sys.exit(main())
