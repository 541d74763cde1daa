"""Text interchange formats.

Edge list: first line ``n m``, then m lines ``u v`` (0-based). ``#`` starts a
comment anywhere on a line; blank lines are ignored. Partition file: one line
per class, vertex ids whitespace-separated, class order = line order. Set
file: a single line of vertex ids, order significant.
"""

from __future__ import annotations

from .graph import Graph, from_edge_list
from .resolvability import OrderedPartition, VertexSequence


class FormatError(ValueError):
    """Malformed input file; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            yield lineno, stripped


def parse_edge_list(text: str) -> Graph:
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError(1, "empty edge-list input")
    lineno, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise FormatError(lineno, f"expected header 'n m', got {header!r}")
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise FormatError(lineno, f"non-integer header {header!r}") from None
    if len(lines) - 1 != m:
        last = lines[-1][0] if len(lines) > 1 else lineno
        raise FormatError(last, f"header promises {m} edges, found {len(lines) - 1}")
    pairs = []
    for lineno, line in lines[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(lineno, f"non-integer endpoints {line!r}") from None
        try:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
        except ValueError as exc:
            raise FormatError(lineno, str(exc)) from None
        pairs.append((u, v))
    return from_edge_list(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_partition(text: str) -> OrderedPartition:
    classes = []
    for lineno, line in _data_lines(text):
        try:
            classes.append(tuple(int(x) for x in line.split()))
        except ValueError:
            raise FormatError(lineno, f"non-integer vertex id in {line!r}") from None
    if not classes:
        raise FormatError(1, "partition file has no classes")
    try:
        return OrderedPartition(tuple(classes))
    except ValueError as exc:
        raise FormatError(1, str(exc)) from None


def format_partition(pi: OrderedPartition) -> str:
    return "\n".join(" ".join(str(v) for v in cls) for cls in pi.classes) + "\n"


def parse_vertex_set(text: str) -> VertexSequence:
    ids = []
    for lineno, line in _data_lines(text):
        try:
            ids.extend(int(x) for x in line.split())
        except ValueError:
            raise FormatError(lineno, f"non-integer vertex id in {line!r}") from None
    try:
        return VertexSequence(tuple(ids))
    except ValueError as exc:
        raise FormatError(1, str(exc)) from None


def format_vertex_set(s: VertexSequence) -> str:
    return " ".join(str(v) for v in s.vertices) + "\n"


def format_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
