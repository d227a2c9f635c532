"""graph6 and DOT serialization.

graph6 layout for ``n <= 62``: one size byte ``n + 63``, then the upper
triangle in column order ``x(0,1), x(0,2), x(1,2), x(0,3), ...`` packed six
bits per byte (most significant first, zero padded) with 63 added.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, GraphError, SizeCeilingError

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def _nbytes(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def write_graph6(G: Graph) -> str:
    n = G.n
    if n > MAX_VERTICES:
        raise SizeCeilingError(f"graph6 writer supports n <= {MAX_VERTICES}")
    out = [chr(n + 63)]
    acc = k = 0
    rows = G.rows
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = acc << 1 | (rj >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside 63..126")
    n = ord(s[0]) - 63
    if n > MAX_VERTICES:
        raise Graph6Error(f"size byte {s[0]!r} encodes n > {MAX_VERTICES} (unsupported)")
    data = s[1:]
    if len(data) != _nbytes(n):
        raise Graph6Error(f"expected {_nbytes(n)} data bytes for n={n}, got {len(data)}")
    total = n * (n - 1) // 2
    value = 0
    for ch in data:
        value = value << 6 | (ord(ch) - 63)
    pad = len(data) * 6 - total
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    value >>= pad
    rows = [0] * n
    k = total
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def export_dot(G: Graph, labels: dict[int, str] | None = None, name: str = "G") -> str:
    """Undirected DOT: node lines in vertex order, then ``u -- v`` with u < v."""
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        if labels and v in labels:
            text = str(labels[v]).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {v} [label="{text}"];')
        else:
            lines.append(f"  {v};")
    for u, v in G.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
