"""Text file formats for posets and graphs.

Poset format: first non-comment line ``poset n=<N>``, then one ``a < b`` line
per generating pair (0-based indices; the transitive closure is applied on
load).  Graph format mirrors it with ``graph n=<N>`` and ``a -- b`` lines.
``#`` starts a comment, blank lines are ignored.  Export emits Hasse cover
pairs only.
"""

from __future__ import annotations

import re

from .comparability import ComparabilityGraph, graph_from_edges
from .core import Poset, from_relations

__all__ = [
    "FormatError",
    "parse_poset",
    "emit_poset",
    "parse_graph",
    "emit_graph",
    "hasse_dot",
    "load_poset",
    "save_poset",
]


class FormatError(ValueError):
    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


_HEADER = re.compile(r"^(poset|graph)\s+n=(\d+)$")


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse(text: str, kind: str, pair_sep: str, path: str):
    lines = _lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError(path, 1, f"missing '{kind} n=<N>' header") from None
    m = _HEADER.match(header)
    if not m or m.group(1) != kind:
        raise FormatError(path, lineno, f"expected '{kind} n=<N>', got {header!r}")
    n = int(m.group(2))
    pairs = []
    for lineno, line in lines:
        parts = line.split(pair_sep)
        if len(parts) != 2:
            raise FormatError(path, lineno, f"expected 'a {pair_sep} b'")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(path, lineno, "indices must be integers") from None
        if not (0 <= x < n and 0 <= y < n):
            raise FormatError(path, lineno, f"index out of range for n={n}")
        pairs.append((x, y))
    return n, pairs


def parse_poset(text: str, path: str = "<string>") -> Poset:
    n, pairs = _parse(text, "poset", "<", path)
    return from_relations(n, pairs)


def emit_poset(p: Poset) -> str:
    lines = [f"poset n={p.n}"]
    lines += [f"{x} < {y}" for x, y in p.hasse_pairs()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, path: str = "<string>") -> ComparabilityGraph:
    n, pairs = _parse(text, "graph", "--", path)
    return graph_from_edges(n, pairs)


def emit_graph(g: ComparabilityGraph) -> str:
    lines = [f"graph n={g.n}"]
    lines += [f"{x} -- {y}" for x, y in g.edges()]
    return "\n".join(lines) + "\n"


def hasse_dot(p: Poset, name: str = "poset") -> str:
    """DOT rendering of the Hasse diagram (visualization only)."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines += [f"  {v};" for v in range(p.n)]
    lines += [f"  {x} -> {y};" for x, y in p.hasse_pairs()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_poset(path: str) -> Poset:
    with open(path) as fh:
        return parse_poset(fh.read(), path)


def save_poset(path: str, p: Poset) -> None:
    with open(path, "w") as fh:
        fh.write(emit_poset(p))
