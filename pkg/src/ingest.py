"""
Data ingestion module for monok.
Handles graph6 / edge-list graphs and colouring CSV: parsing, validation, serialization.
"""
from enum import Enum
from typing import Dict, List, Optional, Tuple
import csv
import io
import os
import sys

from src.colouring import EdgeColouring
from src.errors import ColouringError, GraphError, ParseError
from src.graph import Edge, Graph, canonical_edge

GRAPH6_HEADER = ">>graph6<<"
COLOURING_HEADER = ["u", "v", "colour"]


class GraphFormat(Enum):
    GRAPH6 = "graph6"
    EDGE_LIST = "edge-list"

    @classmethod
    def from_flag(cls, flag: str) -> 'GraphFormat':
        """Map a CLI spelling (g6, graph6, edges, edge-list) to a format."""
        aliases = {'g6': cls.GRAPH6, 'graph6': cls.GRAPH6,
                   'edges': cls.EDGE_LIST, 'edge-list': cls.EDGE_LIST}
        try:
            return aliases[flag]
        except KeyError:
            raise ValueError(f"Unknown graph format: {flag}") from None


def parse_graph(text: str, fmt: GraphFormat) -> Graph:
    """
    Parse graph text in the given format.

    Args:
        text: Encoded graph
        fmt: GraphFormat of the text

    Returns:
        Graph with exactly the encoded vertex count and edge set
    """
    if fmt is GraphFormat.GRAPH6:
        return _parse_graph6(text)
    return _parse_edge_list(text)


def serialize_graph(G: Graph, fmt: GraphFormat) -> str:
    """
    Canonical text form of a graph; parse_graph inverts it.

    Args:
        G: Graph to encode
        fmt: Output format

    Returns:
        Encoded text ending in a newline
    """
    if fmt is GraphFormat.GRAPH6:
        return _encode_graph6(G) + "\n"
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def _encode_graph6(G: Graph) -> str:
    if G.n >= 63:
        raise GraphError(f"graph6 output supports n < 63, got n={G.n}")
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(G.n + 63)]
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def _parse_graph6(text: str) -> Graph:
    start = len(text) - len(text.lstrip())
    body = text.strip()
    if body.startswith(GRAPH6_HEADER):
        start += len(GRAPH6_HEADER)
        body = body[len(GRAPH6_HEADER):]

    if not body:
        raise ParseError("Empty graph6 string", start)
    head = ord(body[0])
    if head == 126:
        raise ParseError("graph6 headers for n >= 63 are not supported", start)
    if not 63 <= head < 126:
        raise ParseError(f"Malformed graph6 header byte {body[0]!r}", start)
    n = head - 63
    if n < 1:
        raise ParseError("graph6 string encodes a graph with no vertices", start)

    pairs = n * (n - 1) // 2
    expected = 1 + (pairs + 5) // 6
    if len(body) != expected:
        raise ParseError(
            f"graph6 body for n={n} needs {expected} bytes, got {len(body)}",
            start + min(len(body), expected))

    bits: List[int] = []
    for pos in range(1, expected):
        value = ord(body[pos]) - 63
        if not 0 <= value < 64:
            raise ParseError(f"Invalid graph6 byte {body[pos]!r}", start + pos)
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[pairs:]):
        raise ParseError("Non-zero graph6 padding bits", start + expected - 1)

    edges = []
    position = 0
    for j in range(1, n):
        for i in range(j):
            if bits[position]:
                edges.append((i, j))
            position += 1
    return Graph(n, tuple(edges))


def _tokens(line: str, line_offset: int) -> List[Tuple[str, int]]:
    """Whitespace-separated tokens of a line with their byte offsets."""
    tokens = []
    col = 0
    for part in line.split():
        col = line.index(part, col)
        tokens.append((part, line_offset + len(line[:col].encode('utf-8'))))
        col += len(part)
    return tokens


def _is_index(token: str) -> bool:
    # str.isdigit also accepts superscripts and non-ASCII digits
    return token.isascii() and token.isdigit()


def _parse_edge_list(text: str) -> Graph:
    n: Optional[int] = None
    edges: List[Edge] = []
    seen: Dict[Edge, int] = {}
    offset = 0

    for line in text.splitlines(keepends=True):
        line_offset = offset
        offset += len(line.encode('utf-8'))
        tokens = _tokens(line, line_offset)
        if not tokens:
            continue

        if n is None:
            if len(tokens) != 1 or not _is_index(tokens[0][0]):
                raise ParseError("Malformed header: expected a vertex count", line_offset)
            n = int(tokens[0][0])
            if n < 1:
                raise ParseError("Vertex count must be at least 1", tokens[0][1])
            continue

        if len(tokens) != 2:
            raise ParseError(f"Expected 'u v', got {line.strip()!r}", line_offset)
        ends = []
        for token, token_offset in tokens:
            if not _is_index(token):
                raise ParseError(f"Invalid vertex index {token!r}", token_offset)
            vertex = int(token)
            if vertex >= n:
                raise ParseError(f"Vertex index {vertex} out of range for n={n}", token_offset)
            ends.append(vertex)
        u, v = ends
        if u == v:
            raise ParseError(f"Self-loop at vertex {u}", line_offset)
        e = canonical_edge(u, v)
        if e in seen:
            raise ParseError(f"Duplicate edge {e}", line_offset)
        seen[e] = line_offset
        edges.append(e)

    if n is None:
        raise ParseError("Malformed header: missing vertex count", 0)
    return Graph(n, tuple(edges))


def parse_colouring(text: str, G: Graph) -> EdgeColouring:
    """
    Parse colouring CSV ("u,v,colour" header) against its graph.

    Args:
        text: CSV text
        G: Graph the colouring must cover exactly

    Returns:
        EdgeColouring with labels compacted to 1..r
    """
    line_offsets = [0]
    for line in text.splitlines(keepends=True):
        line_offsets.append(line_offsets[-1] + len(line.encode('utf-8')))

    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != COLOURING_HEADER:
        raise ParseError("Colouring CSV must start with the header u,v,colour", 0)

    mapping: Dict[Edge, int] = {}
    for row in reader:
        row_offset = line_offsets[min(reader.line_num - 1, len(line_offsets) - 1)]
        try:
            u, v, colour = (int(row[key].strip()) for key in COLOURING_HEADER)
        except (AttributeError, TypeError, ValueError):
            raise ParseError(f"Row {reader.line_num}: expected three integers", row_offset) from None
        if colour < 1:
            raise ParseError(f"Row {reader.line_num}: colour must be positive", row_offset)
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            raise ColouringError(f"Row {reader.line_num}: ({u}, {v}) is not an edge of the graph")
        e = canonical_edge(u, v)
        if e in mapping:
            raise ParseError(f"Row {reader.line_num}: edge {e} coloured twice", row_offset)
        mapping[e] = colour

    return EdgeColouring.from_mapping(G, mapping, compact=True)


def serialize_colouring(phi: EdgeColouring) -> str:
    """Colouring CSV with sorted u < v rows under a u,v,colour header."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(COLOURING_HEADER)
    for (u, v), c in phi.items():
        writer.writerow([u, v, c])
    return buffer.getvalue()


def guess_format(filepath: str) -> GraphFormat:
    _, ext = os.path.splitext(filepath)
    return GraphFormat.GRAPH6 if ext.lower() in ('.g6', '.graph6') else GraphFormat.EDGE_LIST


def sniff_format(text: str) -> GraphFormat:
    """graph6 when the first line is printable graph6 text, else edge list."""
    first = text.lstrip().split("\n", 1)[0].strip()
    if first.startswith(GRAPH6_HEADER):
        return GraphFormat.GRAPH6
    if first and all(63 <= ord(ch) <= 126 for ch in first):
        return GraphFormat.GRAPH6
    return GraphFormat.EDGE_LIST


def read_graph(filepath: str, fmt: Optional[GraphFormat] = None) -> Graph:
    """
    Read a graph file; "-" reads standard input.

    Args:
        filepath: Path to the graph file
        fmt: Format; guessed from the extension (or the text on stdin) when None

    Returns:
        Parsed Graph
    """
    if filepath == '-':
        text = sys.stdin.read()
        return parse_graph(text, fmt or sniff_format(text))
    with open(filepath, 'r', encoding='utf-8') as file:
        text = file.read()
    return parse_graph(text, fmt or guess_format(filepath))


def read_colouring(filepath: str, G: Graph) -> EdgeColouring:
    with open(filepath, 'r', encoding='utf-8') as file:
        return parse_colouring(file.read(), G)


def write_colouring(phi: EdgeColouring, filepath: str) -> None:
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(filepath, 'w', newline='', encoding='utf-8') as file:
        file.write(serialize_colouring(phi))
