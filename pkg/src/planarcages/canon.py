"""Canonical labelling by partition refinement and individualisation.

A stripped-down relative of McKay's search tree: cells are refined by
(current cell, sorted multiset of neighbour cells) until equitable, the
first smallest non-singleton cell is split by individualising each of its
vertices in turn, and leaves (discrete partitions) are compared by the
relabelled adjacency matrix.  Automorphisms discovered when two leaves agree
prune siblings in the same orbit and trigger backjumps, which keeps highly
symmetric inputs (windmills, Platonic solids) cheap.
"""

from __future__ import annotations

from .graph import MAX_ORDER, GraphError, SimpleGraph

Cells = list[list[int]]


def refine(nbrs: tuple[tuple[int, ...], ...], cells: Cells) -> Cells:
    """Equitable refinement of an ordered partition; equivariant under relabelling."""
    n = len(nbrs)
    cell_of = [0] * n
    while True:
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        out: Cells = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(sorted(cell_of[w] for w in nbrs[v]))
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                split = True
                out.extend(groups[k] for k in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def _individualise(cells: Cells, cell_index: int, v: int) -> Cells:
    cell = cells[cell_index]
    rest = [w for w in cell if w != v]
    return cells[:cell_index] + [[v], rest] + cells[cell_index + 1 :]


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


class _Search:
    def __init__(self, g: SimpleGraph) -> None:
        self.g = g
        self.n = g.n
        self.nbrs = tuple(g.neighbors(v) for v in range(g.n))
        self.generators: list[list[int]] = []
        self.first: tuple[list[int], tuple[int, ...], list[int]] | None = None
        self.best: tuple[list[int], tuple[int, ...], list[int]] | None = None

    def _certificate(self, pos: list[int]) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.g.edges:
            pu, pv = pos[u], pos[v]
            rows[pu] |= 1 << pv
            rows[pv] |= 1 << pu
        return tuple(rows)

    def _leaf(self, cells: Cells, prefix: list[int]) -> int | None:
        pos = [0] * self.n
        for idx, cell in enumerate(cells):
            pos[cell[0]] = idx
        cert = self._certificate(pos)
        if self.first is None:
            self.first = self.best = (pos, cert, list(prefix))
            return None
        for ref in (self.first, self.best):
            ref_pos, ref_cert, ref_prefix = ref
            if cert == ref_cert:
                inv = [0] * self.n
                for v, p in enumerate(ref_pos):
                    inv[p] = v
                gamma = [inv[pos[v]] for v in range(self.n)]
                if any(gamma[v] != v for v in range(self.n)):
                    self.generators.append(gamma)
                common = 0
                while common < len(prefix) and common < len(ref_prefix) and prefix[common] == ref_prefix[common]:
                    common += 1
                return common
        assert self.best is not None
        if cert > self.best[1]:
            self.best = (pos, cert, list(prefix))
        return None

    def _orbits(self, prefix: list[int]) -> _UnionFind:
        uf = _UnionFind(self.n)
        for gamma in self.generators:
            if all(gamma[p] == p for p in prefix):
                for v in range(self.n):
                    uf.union(v, gamma[v])
        return uf

    def search(self, cells: Cells, prefix: list[int]) -> int | None:
        cells = refine(self.nbrs, cells)
        if len(cells) == self.n:
            return self._leaf(cells, prefix)
        level = len(prefix)
        target = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        explored: list[int] = []
        n_gens = -1
        uf = None
        for v in sorted(cells[target]):
            if explored:
                if n_gens != len(self.generators):
                    uf = self._orbits(prefix)
                    n_gens = len(self.generators)
                assert uf is not None
                root = uf.find(v)
                if any(uf.find(u) == root for u in explored):
                    continue
            explored.append(v)
            back = self.search(_individualise(cells, target, v), prefix + [v])
            if back is not None and back < level:
                return back
        return None


def canonical_labeling(g: SimpleGraph) -> list[int]:
    """Permutation ``perm`` such that ``g.relabel(perm)`` is the canonical graph."""
    if g.n > MAX_ORDER:
        raise GraphError(f"canonical labelling supports n <= {MAX_ORDER}, got {g.n}")
    if g.n == 0:
        return []
    s = _Search(g)
    s.search([list(range(g.n))], [])
    assert s.best is not None
    return s.best[0]


def canonical_graph(g: SimpleGraph) -> SimpleGraph:
    return g.relabel(canonical_labeling(g))


def _graph6_any(g: SimpleGraph) -> bytes:
    # graph6 with the 4-byte size header when n > 62
    bits = []
    for j in range(1, g.n):
        aj = g.adj[j]
        bits.extend(aj >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    if g.n <= 62:
        head = bytes([g.n + 63])
    else:
        head = bytes([126, 63 + (g.n >> 12 & 63), 63 + (g.n >> 6 & 63), 63 + (g.n & 63)])
    body = bytearray()
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return head + bytes(body)


def canonical_form(g: SimpleGraph) -> bytes:
    """Isomorphism-class key: graph6 of the canonical relabelling."""
    return _graph6_any(canonical_graph(g))


def automorphism_generators(g: SimpleGraph) -> list[list[int]]:
    """Automorphisms found while canonicalising (a generating set is not guaranteed)."""
    if g.n == 0:
        return []
    s = _Search(g)
    s.search([list(range(g.n))], [])
    return s.generators
