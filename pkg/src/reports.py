"""
Reporting module for monok.
JSON reports on stdout, aligned tables and CSV sidecars for check suites.
"""
from typing import Dict, List, Optional
import json
import os
import sys

import pandas as pd

from src.colouring import EdgeColouring
from src.config import SCHEMA
from src.graph import Graph
from src.ingest import GraphFormat, serialize_graph
from src.solver import BoundsReport
from src.suites import CheckReport
from src.verify import PathSystem, SuperpathBoundReport, VerifyReport

TABLE_COLUMNS = ['index', 'descriptor', 'k', 'expected', 'lower', 'upper',
                 'computed', 'status', 'provenance', 'note']


def _pair_key(pair) -> str:
    return f"{pair[0]}-{pair[1]}"


def colouring_dict(phi: Optional[EdgeColouring]) -> Optional[Dict]:
    """Colour per edge in graph order, with the colour count."""
    if phi is None:
        return None
    return {
        "r": phi.r,
        "edges": [[u, v, c] for (u, v), c in phi.items()],
    }


def path_system_dict(system: PathSystem) -> List[Dict]:
    return [{"colour": c, "path": list(p)} for p, c in zip(system.paths, system.colours)]


def verify_report_dict(report: VerifyReport, G: Graph) -> Dict:
    """
    JSON-ready form of a VerifyReport.

    Args:
        report: Verification outcome
        G: The verified graph

    Returns:
        Dictionary; witnesses keyed "u-v" in pair order
    """
    return {
        "command": "verify",
        "graph6": serialize_graph(G, GraphFormat.GRAPH6).strip(),
        "k": report.k,
        "ok": report.ok,
        "pairs_checked": report.pairs_checked,
        "failing_pair": list(report.failing_pair) if report.failing_pair else None,
        "failing_count": report.failing_count,
        "witnesses": {_pair_key(pair): path_system_dict(system)
                      for pair, system in sorted(report.witnesses.items())},
    }


def superpath_report_dict(report: SuperpathBoundReport, G: Graph) -> Dict:
    return {
        "command": "superpath",
        "graph6": serialize_graph(G, GraphFormat.GRAPH6).strip(),
        "holds": report.holds,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "weight": report.weight,
        "r": report.r,
        "tight": report.tight,
        "degree_spread_ok": report.degree_spread_ok,
        "profile": {_pair_key(pair): value for pair, value in report.profile.values},
    }


def bounds_report_dict(report: BoundsReport, G: Graph) -> Dict:
    """JSON-ready form of a BoundsReport; the witness is canonical."""
    return {
        "command": "solve",
        "graph6": serialize_graph(G, GraphFormat.GRAPH6).strip(),
        "k": report.k,
        "lower": {"value": report.lower, "source": report.lower_source},
        "upper": {"value": report.upper, "source": report.upper_source},
        "exact": report.exact,
        "status": report.status,
        "nodes_expanded": report.nodes_expanded,
        "message": report.message,
        "witness": colouring_dict(report.witness),
    }


def check_report_dict(report: CheckReport) -> Dict:
    records = []
    for r in report.records:
        records.append({
            "index": r.index,
            "descriptor": r.descriptor,
            "graph6": r.graph6,
            "k": r.k,
            "expected": r.expected,
            "provenance": r.provenance,
            "lower": r.lower,
            "upper": r.upper,
            "computed": r.computed,
            "status": r.status,
            "witness": list(r.witness) if r.witness is not None else None,
            "counterexample": r.counterexample,
            "note": r.note,
        })
    return {
        "command": "check",
        "suite": report.suite,
        "kind": report.kind,
        "verdict": report.verdict,
        "parameters": report.parameters,
        "summary": report.summary,
        "records": records,
    }


def dump_json(payload: Dict) -> str:
    """Schema-tagged JSON with sorted keys; identical inputs give identical bytes."""
    return json.dumps(dict(payload, schema=SCHEMA), sort_keys=True, indent=2) + "\n"


def records_frame(report: CheckReport) -> pd.DataFrame:
    rows = [{column: getattr(r, column) for column in TABLE_COLUMNS} for r in report.records]
    frame = pd.DataFrame(rows, columns=TABLE_COLUMNS)
    for column in ('expected', 'lower', 'upper', 'computed'):
        frame[column] = frame[column].astype('Int64')
    return frame


def format_table(report: CheckReport) -> str:
    """Aligned plain-text table of the records."""
    frame = records_frame(report)
    if frame.empty:
        return "(no instances)"
    return frame.to_string(index=False, na_rep='-')


def export_table(report: CheckReport, filepath: str) -> str:
    """
    Write the aligned table to filepath and a CSV sidecar next to it.

    Args:
        report: Check report
        filepath: Text table path

    Returns:
        Path of the CSV sidecar
    """
    folder = os.path.dirname(filepath)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(filepath, 'w', encoding='utf-8') as f:
        f.write(format_table(report) + "\n")
    sidecar = os.path.splitext(filepath)[0] + '.csv'
    records_frame(report).to_csv(sidecar, index=False)
    return sidecar


def print_check_summary(report: CheckReport) -> None:
    """Print the record table and counts to stderr."""
    out = sys.stderr
    print("\n" + "=" * 60, file=out)
    print(f"CHECK SUITE {report.suite} ({report.kind})", file=out)
    print("=" * 60, file=out)
    print(format_table(report), file=out)
    print("\n--- Summary ---", file=out)
    for key, value in report.summary.items():
        print(f"{key}: {value}", file=out)
    print(f"verdict: {report.verdict}", file=out)
    print("=" * 60 + "\n", file=out)


def print_bounds_summary(report: BoundsReport) -> None:
    out = sys.stderr
    print(f"\n--- mc_{report.k} bounds ---", file=out)
    print(f"{'lower':<8} {report.lower:<6} {report.lower_source}", file=out)
    print(f"{'upper':<8} {report.upper:<6} {report.upper_source}", file=out)
    exact = report.exact if report.exact is not None else "-"
    print(f"{'exact':<8} {exact!s:<6} ({report.status}, {report.nodes_expanded} nodes)", file=out)
    print(file=out)
