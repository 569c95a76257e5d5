"""
Configuration for monok.
Loads config.json and carries the search budgets used by every solver.
"""
from dataclasses import dataclass, replace
from typing import Dict, Optional
import json
import logging
import time

from src.errors import BudgetExceededError

log = logging.getLogger(__name__)

SCHEMA = "monok/1"

DEFAULT_CONFIG: Dict = {
    "schema": SCHEMA,
    "workers": 1,
    "budget": {
        "max_edges": 12,
        "max_shortcut_edges": 20,
        "max_subgraph_edges": 24,
        "max_subgraph_vertices": 10,
        "max_subgraph_nodes": 5000000,
        "max_nodes_expanded": 5000000,
        "timeout_sec": 600.0,
        "shortcut_allowed": True,
        "max_paths": 100000,
        "max_chromatic_vertices": 16,
    },
    "fuzz": {
        "densities": [0.4, 0.6, 0.8],
        "colour_divisor": 3,
        "max_vertices": 8,
    },
    "suites": {
        "thm-small-k": {"k": [2, 3], "n_max": 6, "extra_edges": [0, 1, 3]},
        "thm-bip-small-k": {"k": [2, 3], "t_max": 3},
        "thm-Kn": {"k": [2, 3, 4], "n_max": 5},
        "thm-Kst": {"k": [2, 3], "t_max": 3},
        "thm-min-edge": {"cycle_min": 4, "cycle_max": 8, "harary_k": [3], "n_max": 7},
        "ineq-superpath": {"count": 1000},
        "conj-evidence": {"k": [2], "n_max": 5, "t_max": 3, "random": 4,
                          "density": 0.6, "max_edges": 12},
    },
}


def load_config(config_path: str = 'config.json') -> Dict:
    """
    Load configuration from a JSON file, filling gaps from the defaults.

    Args:
        config_path: Path to the JSON configuration file

    Returns:
        Configuration dictionary
    """
    config = json.loads(json.dumps(DEFAULT_CONFIG))
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            loaded = json.load(f)
    except FileNotFoundError:
        log.info("No config file at %s, using defaults", config_path)
        return config
    except json.JSONDecodeError as e:
        log.warning("Ignoring unreadable config %s: %s", config_path, e)
        return config

    for key, value in loaded.items():
        if isinstance(value, dict) and isinstance(config.get(key), dict):
            config[key].update(value)
        else:
            config[key] = value
    return config


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits shared by the exact searches."""

    max_edges: int = 12
    max_shortcut_edges: int = 20
    max_subgraph_edges: int = 24
    max_subgraph_vertices: int = 10
    max_subgraph_nodes: int = 5000000
    max_nodes_expanded: int = 5000000
    timeout_sec: Optional[float] = 600.0
    shortcut_allowed: bool = True
    max_paths: int = 100000
    max_chromatic_vertices: int = 16

    def __post_init__(self):
        for name in ('max_edges', 'max_shortcut_edges', 'max_subgraph_edges',
                     'max_subgraph_vertices', 'max_subgraph_nodes', 'max_nodes_expanded',
                     'max_paths', 'max_chromatic_vertices'):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.timeout_sec is not None and self.timeout_sec <= 0:
            raise ValueError("timeout_sec must be positive")

    @classmethod
    def from_config(cls, section: Dict) -> 'SearchBudget':
        """Build a budget from the `budget` section of the config."""
        known = {k: v for k, v in section.items()
                 if k in cls.__dataclass_fields__}
        return cls(**known)

    def override(self, **changes) -> 'SearchBudget':
        """Return a copy with the non-None keyword values replaced."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


class SearchCounter:
    """Counts expanded search nodes and enforces the budget limits."""

    def __init__(self, budget: SearchBudget, label: str = "search",
                 limit: Optional[int] = None):
        self.budget = budget
        self.label = label
        self.limit = budget.max_nodes_expanded if limit is None else limit
        self.nodes = 0
        self._started = time.monotonic()

    def elapsed(self) -> float:
        return time.monotonic() - self._started

    def tick(self, best=None) -> None:
        """Record one expanded node; raise once a limit is passed."""
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceededError(
                f"{self.label}: more than {self.limit} nodes expanded",
                best=best)
        if self.budget.timeout_sec is not None and self.nodes % 256 == 0:
            if self.elapsed() > self.budget.timeout_sec:
                raise BudgetExceededError(
                    f"{self.label}: wall time limit of {self.budget.timeout_sec}s reached",
                    best=best)
