"""
Exception hierarchy for monok.
Library code raises these; main.py maps them to exit codes.
"""
from typing import Any, Optional


class MonokError(Exception):
    """Base class for every error raised by the package."""


class ParseError(MonokError):
    """Malformed graph or colouring text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class GraphError(MonokError):
    """Invalid graph data: self-loop, parallel edge, bad vertex index."""


class ColouringError(MonokError):
    """Colouring does not fit its graph or uses a bad label."""


class PreconditionError(MonokError):
    """An operation was called outside its domain."""


class NotKConnectedError(PreconditionError):
    """The graph is not k-connected for the requested k."""


class BudgetExceededError(MonokError):
    """
    A search hit one of its resource limits.

    `best` holds the best partial result found so far, when there is one.
    """

    def __init__(self, message: str, best: Optional[Any] = None):
        super().__init__(message)
        self.best = best
