"""Plain-text edge list format.

Header line "n m", then m lines "u v" with 0-indexed endpoints. Blank
lines and lines starting with '#' are ignored. Written output is
canonical: edges with u < v, sorted.
"""

from __future__ import annotations

from .graph import Graph, GraphError, build_graph


class ParseError(GraphError):
    """Malformed edge-list text; the message carries a line number."""


def parse_edge_list(text: str) -> Graph:
    header = None
    edges = []
    seen = set()
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            header = (a, b)
            n, m = a, b
            if n < 1 or m < 0:
                raise ParseError(f"line {lineno}: bad header n={n} m={m}")
            continue
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"line {lineno}: edge ({a}, {b}) out of range for n={n}")
        if a == b:
            raise ParseError(f"line {lineno}: self-loop ({a}, {b})")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge ({a}, {b})")
        seen.add(key)
        edges.append((a, b))
    if header is None:
        raise ParseError("line 1: missing 'n m' header")
    if len(edges) != m:
        raise ParseError(f"header declares m={m} edges but {len(edges)} were listed")
    return build_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"
