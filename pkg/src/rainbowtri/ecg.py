"""The ``.ecg`` edge-list text format.

::

    # optional comment lines; "# key: value" lines are kept as metadata
    n m
    u v c      (m lines, 0-based vertex ids, non-negative integer color)
"""

from __future__ import annotations

from typing import Mapping, Optional

from rainbowtri.graph import EdgeColoredGraph, GraphError


class EcgParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _ints(tokens: list[str], lineno: int, expected: int) -> list[int]:
    if len(tokens) != expected:
        raise EcgParseError(f"expected {expected} integers, got {len(tokens)}", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise EcgParseError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None


def parse_ecg(text: str) -> EdgeColoredGraph:
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            n, m = _ints(tokens, lineno, 2)
            if n < 0 or m < 0:
                raise EcgParseError("vertex and edge counts must be non-negative", lineno)
            header = (n, m)
            continue
        u, v, c = _ints(tokens, lineno, 3)
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise EcgParseError(f"vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise EcgParseError(f"self-loop at vertex {u}", lineno)
        if c < 0:
            raise EcgParseError(f"negative color {c}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EcgParseError(f"duplicate edge {{{u}, {v}}}", lineno)
        seen.add(key)
        edges.append((u, v, c))
    if header is None:
        raise EcgParseError("missing 'n m' header line")
    if len(edges) != header[1]:
        raise EcgParseError(f"header declares {header[1]} edges but {len(edges)} were given")
    return EdgeColoredGraph(header[0], edges)


def parse_ecg_metadata(text: str) -> dict[str, str]:
    """``# key: value`` comment lines, in file order."""
    meta = {}
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#") and ":" in line:
            key, _, value = line[1:].partition(":")
            meta[key.strip()] = value.strip()
    return meta


def write_ecg(g: EdgeColoredGraph, metadata: Optional[Mapping[str, str]] = None) -> str:
    """Canonical text: metadata comments, header, then edges sorted by ``(u, v)``."""
    lines = [f"# {k}: {v}" for k, v in (metadata or {}).items()]
    lines.append(f"{g.n} {g.num_edges}")
    lines.extend(f"{u} {v} {c}" for u, v, c in g.edges)
    return "\n".join(lines) + "\n"


def read_ecg(path: str) -> EdgeColoredGraph:
    with open(path, encoding="utf-8") as f:
        return parse_ecg(f.read())
