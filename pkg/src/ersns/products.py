"""Cartesian, tensor and shadow constructions.

Product vertices are numbered row-major: ``(u, u')`` is ``u * n2 + u'``.  For
the shadow ``D_m(G)`` copy ``i`` of vertex ``j`` is ``i * n + j``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, check_size, bits


@dataclass(frozen=True)
class ProductVertexMap:
    """Bijection between product indices and coordinate pairs."""

    left: int
    right: int

    def index(self, a: int, b: int) -> int:
        if not (0 <= a < self.left and 0 <= b < self.right):
            raise GraphError(f"coordinate ({a}, {b}) out of range")
        return a * self.right + b

    def coords(self, index: int) -> tuple[int, int]:
        if not 0 <= index < self.left * self.right:
            raise GraphError(f"product vertex {index} out of range")
        return divmod(index, self.right)

    def __len__(self) -> int:
        return self.left * self.right


def cartesian(G1: Graph, G2: Graph) -> tuple[Graph, ProductVertexMap]:
    n1, n2 = G1.n, G2.n
    check_size(n1 * n2)
    rows = []
    for u in range(n1):
        for a in range(n2):
            m = G2.rows[a] << (u * n2)
            for v in bits(G1.rows[u]):
                m |= 1 << (v * n2 + a)
            rows.append(m)
    return Graph(n1 * n2, tuple(rows)), ProductVertexMap(n1, n2)


def tensor(G1: Graph, G2: Graph) -> tuple[Graph, ProductVertexMap]:
    n1, n2 = G1.n, G2.n
    check_size(n1 * n2)
    rows = []
    for u in range(n1):
        for a in range(n2):
            m = 0
            for v in bits(G1.rows[u]):
                m |= G2.rows[a] << (v * n2)
            rows.append(m)
    return Graph(n1 * n2, tuple(rows)), ProductVertexMap(n1, n2)


def shadow(m: int, G: Graph) -> tuple[Graph, ProductVertexMap]:
    """``D_m(G)``: ``v^i_j ~ v^k_l`` iff ``v_j ~ v_l``, for all copies ``i, k``."""
    if m < 1:
        raise GraphError(f"shadow needs m >= 1, got {m}")
    n = G.n
    check_size(m * n)
    rows = []
    for _ in range(m):
        for j in range(n):
            row = 0
            for i in range(m):
                row |= G.rows[j] << (i * n)
            rows.append(row)
    return Graph(m * n, tuple(rows)), ProductVertexMap(m, n)
