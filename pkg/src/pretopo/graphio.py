"""Plain-text edge lists and DOT export.

Edge-list format::

    # comments and blank lines are ignored
    n 4
    0 1
    1 2

The header ``n <count>`` must be the first content line. Vertices are
0-based. The canonical form has no comments, one edge per line with
``u < v`` and edges in lexicographic order; it round-trips byte for byte.
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

from .errors import InputError, ParseError
from .graph_core import Graph


def parse_edge_list(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ParseError("expected header 'n <count>'", lineno)
            n = _nonneg(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = (_nonneg(t, lineno) for t in tokens)
        if u >= n or v >= n:
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ParseError("empty input: missing header 'n <count>'", 1)
    return Graph.from_edges(n, edges)


def _nonneg(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative value {value}", lineno)
    return value


def read_edge_list(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, labels: Sequence[int] | None = None, name: str = "G") -> str:
    """Undirected DOT; ``labels`` renames vertex i to ``labels[i]``."""
    lab = labels if labels is not None else range(g.n)
    if len(lab) != g.n:
        raise InputError("label count differs from the vertex count")
    out = [f"graph {name} {{"]
    out += [f"  {lab[v]};" for v in range(g.n)]
    out += [f"  {lab[u]} -- {lab[v]};" for u, v in g.edges()]
    out.append("}")
    return "\n".join(out) + "\n"
