"""Canonical labeling and isomorphism testing.

The canonical form is the lexicographically largest row-major upper triangle
over all leaves of an individualization/refinement search tree, in the style
of nauty:

* partitions are refined to the coarsest equitable refinement, splitting by
  neighbour counts into cells ordered by ascending count;
* the target cell is the first smallest non-singleton cell;
* two leaves with the same relabeled adjacency give an automorphism, which is
  used both to jump back to the point where the two paths diverged and to
  skip siblings lying in the same orbit of the prefix stabiliser.

Automorphic leaves have identical matrices, so pruning never changes the
maximum and the result is a true canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, bits


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """``n`` plus the canonical upper triangle packed MSB-first into bytes."""

    n: int
    bits: bytes

    def graph(self) -> Graph:
        """Rebuild the canonically labeled graph."""
        n = self.n
        value = int.from_bytes(self.bits, "big") if self.bits else 0
        total = n * (n - 1) // 2
        value >>= len(self.bits) * 8 - total
        rows = [0] * n
        k = total
        for i in range(n):
            for j in range(i + 1, n):
                k -= 1
                if value >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return Graph(n, tuple(rows))

    def graph6(self) -> str:
        from .formats import write_graph6

        return write_graph6(self.graph())


def _refine(rows, cells, active):
    """Refine ``cells`` (list of vertex lists) to an equitable partition.

    ``active`` holds ids of the cell lists to use as splitters.  Only cell
    positions and neighbour counts steer the process, so the resulting cell
    order is isomorphism invariant.
    """
    cells = list(cells)
    masks = []
    for c in cells:
        m = 0
        for v in c:
            m |= 1 << v
        masks.append(m)
    active = set(active)
    while active:
        for i, c in enumerate(cells):
            if id(c) in active:
                break
        active.discard(id(cells[i]))
        splitter = masks[i]
        new_cells, new_masks = [], []
        for c, m in zip(cells, masks):
            if len(c) == 1:
                new_cells.append(c)
                new_masks.append(m)
                continue
            groups = {}
            for v in c:
                groups.setdefault((rows[v] & splitter).bit_count(), []).append(v)
            if len(groups) == 1:
                new_cells.append(c)
                new_masks.append(m)
                continue
            active.discard(id(c))
            for k in sorted(groups):
                frag = groups[k]
                fm = 0
                for v in frag:
                    fm |= 1 << v
                new_cells.append(frag)
                new_masks.append(fm)
                active.add(id(frag))
        cells, masks = new_cells, new_masks
    return cells


def _target(cells):
    best = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (best is None or len(c) < len(cells[best])):
            best = i
    return best


class _Search:
    def __init__(self, G: Graph):
        self.n = G.n
        self.rows = G.rows
        self.best_key = None
        self.best_order = None
        self.leaves: dict[tuple, tuple[list[int], list[int]]] = {}
        self.gens: list[list[int]] = []

    def key(self, order):
        n = self.n
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        out = []
        for i, v in enumerate(order):
            m = 0
            for u in bits(self.rows[v]):
                if pos[u] > i:
                    m |= 1 << (n - 1 - pos[u])
            out.append(m)
        return tuple(out)

    def orbit_rep(self, path, w, explored):
        """True if ``w`` shares an orbit with an explored sibling."""
        gens = [g for g in self.gens if all(g[x] == x for x in path)]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in gens:
            for x in range(self.n):
                a, b = find(x), find(g[x])
                if a != b:
                    parent[a] = b
        rw = find(w)
        return any(find(e) == rw for e in explored)

    def visit(self, cells, path):
        t = _target(cells)
        if t is None:
            order = [c[0] for c in cells]
            key = self.key(order)
            seen = self.leaves.get(key)
            if seen is None:
                self.leaves[key] = (order, path)
                if self.best_key is None or key > self.best_key:
                    self.best_key, self.best_order = key, order
                return None
            prev_order, prev_path = seen
            gamma = [0] * self.n
            for a, b in zip(prev_order, order):
                gamma[a] = b
            self.gens.append(gamma)
            j = 0
            while j < len(path) and j < len(prev_path) and prev_path[j] == path[j]:
                j += 1
            return j
        cell = cells[t]
        explored: list[int] = []
        for w in cell:
            if explored and self.orbit_rep(path, w, explored):
                continue
            rest = [v for v in cell if v != w]
            single = [w]
            child = cells[:t] + [single, rest] + cells[t + 1:]
            child = _refine(self.rows, child, [id(single)])
            r = self.visit(child, path + [w])
            explored.append(w)
            if r is not None and r < len(path):
                return r
        return None


@lru_cache(maxsize=1 << 16)
def canonical_labeling(G: Graph) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Return the canonical form and an order: position ``i`` holds old vertex ``order[i]``."""
    n = G.n
    if n == 0:
        return CanonicalForm(0, b""), ()
    search = _Search(G)
    start = list(range(n))
    cells = _refine(G.rows, [start], [id(start)])
    search.visit(cells, [])
    key, order = search.best_key, search.best_order
    value = 0
    total = 0
    for i, row in enumerate(key):
        width = n - 1 - i
        value = (value << width) | row
        total += width
    pad = (-total) % 8
    data = (value << pad).to_bytes((total + pad) // 8, "big")
    return CanonicalForm(n, data), tuple(order)


def canonical_form(G: Graph) -> CanonicalForm:
    return canonical_labeling(G)[0]


def canonical_graph(G: Graph) -> Graph:
    """``G`` relabeled into canonical order."""
    _, order = canonical_labeling(G)
    perm = [0] * G.n
    for i, v in enumerate(order):
        perm[v] = i
    return G.relabel(perm)


def are_isomorphic(G: Graph, H: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Test ``G ≅ H``; on success also return ``perm`` with ``G.relabel(perm) == H``."""
    if G.n != H.n or G.edge_count != H.edge_count:
        return False, None
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False, None
    cg, og = canonical_labeling(G)
    ch, oh = canonical_labeling(H)
    if cg != ch:
        return False, None
    perm = [0] * G.n
    for a, b in zip(og, oh):
        perm[a] = b
    perm = tuple(perm)
    if G.relabel(perm) != H:  # pragma: no cover - would mean a canonical-form bug
        raise AssertionError("isomorphism witness failed verification")
    return True, perm


def isomorphic(G: Graph, H: Graph) -> bool:
    return are_isomorphic(G, H)[0]
