"""Local structure of planar graphs: links, their block decomposition, and
the small degree lemmas used by the cage arguments."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import SimpleGraph, components, from_edge_list
from .planarity import PlanarEmbedding, biconnected_blocks, is_outerplanar, is_planar


class LemmaViolation(RuntimeError):
    """A structural statement failed on an input meeting its hypotheses."""


def faces_at(emb: PlanarEmbedding, x: int) -> list[list[int]]:
    """Facial walks through ``x``, one per dart leaving ``x``."""
    out = []
    for u in emb.rotation[x]:
        walk = []
        a, b = x, u
        while True:
            walk.append(a)
            a, b = b, emb.successor(b, a)
            if (a, b) == (x, u):
                break
        out.append(walk)
    return out


def link_vertices(emb: PlanarEmbedding, x: int) -> list[int]:
    """Vertices on faces incident to ``x``, excluding ``x``, ascending."""
    return sorted({v for walk in faces_at(emb, x) for v in walk} - {x})


def link(g: SimpleGraph, emb: PlanarEmbedding, x: int) -> SimpleGraph:
    """Induced subgraph on :func:`link_vertices`; vertex ``i`` is ``link_vertices(emb, x)[i]``."""
    if emb.host != g:
        raise ValueError("embedding belongs to a different graph")
    sub, _ = g.induced(link_vertices(emb, x))
    return sub


@dataclass(frozen=True)
class LinkDecomposition:
    """Blocks-and-bridges split of an outerplanar link.

    ``cycles`` are the 2-connected blocks on three or more vertices,
    ``trees`` the connected pieces made of bridges (isolated vertices count
    as one-vertex trees).  ``intersection`` has nodes ``0..k-1`` for the
    cycles followed by ``k..k+k'-1`` for the trees.
    """

    link: SimpleGraph
    cycles: tuple[frozenset[int], ...]
    trees: tuple[frozenset[int], ...]
    intersection: SimpleGraph
    max_shared: int

    @property
    def k(self) -> int:
        return len(self.cycles)

    @property
    def k_prime(self) -> int:
        return len(self.trees)

    @property
    def c(self) -> int:
        return len(components(self.link))

    @property
    def max_pieces_at_vertex(self) -> int:
        """Largest number of pieces through a single link vertex."""
        pieces = self.cycles + self.trees
        return max((sum(1 for p in pieces if v in p) for v in range(self.link.n)), default=0)

    @property
    def ends(self) -> int:
        # an isolated node is an end of its one-node component
        return sum(1 for v in range(self.intersection.n) if self.intersection.degree(v) <= 1)


def decompose_link(lnk: SimpleGraph) -> LinkDecomposition:
    if not is_outerplanar(lnk):
        raise ValueError("link decomposition needs an outerplanar graph")
    nbrs = [list(lnk.neighbors(v)) for v in range(lnk.n)]
    cycles = []
    bridges = []
    for block in biconnected_blocks(nbrs):
        if len(block) == 1:
            bridges.append(block[0])
        else:
            cycles.append(frozenset(v for e in block for v in e))
    forest = from_edge_list(lnk.n, bridges)
    covered = set().union(*cycles) if cycles else set()
    trees = []
    for comp in components(forest):
        if len(comp) > 1 or comp[0] not in covered:
            trees.append(frozenset(comp))
    cycles.sort(key=min)
    pieces = list(cycles) + trees
    pairs = []
    max_shared = 0
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            if i >= len(cycles) and j >= len(cycles):
                continue  # tree-tree incidences are not recorded
            shared = len(pieces[i] & pieces[j])
            if shared:
                pairs.append((i, j))
                max_shared = max(max_shared, shared)
    return LinkDecomposition(
        lnk,
        tuple(cycles),
        tuple(trees),
        from_edge_list(len(pieces), pairs),
        max_shared,
    )


def is_forest(g: SimpleGraph) -> bool:
    return g.num_edges == g.n - len(components(g))


def is_block_graph(g: SimpleGraph) -> bool:
    """Every 2-connected block is a clique (forests are the triangle-free case)."""
    nbrs = [list(g.neighbors(v)) for v in range(g.n)]
    for block in biconnected_blocks(nbrs):
        vs = {v for e in block for v in e}
        if len(block) != len(vs) * (len(vs) - 1) // 2:
            return False
    return True


class Trichotomy(str, Enum):
    FOUR_AND_M3 = "four_and_m3"
    THREE_AND_M4 = "three_and_m4"
    AT_MOST_TWO = "at_most_two"


def degree_trichotomy(g: SimpleGraph, m: int) -> Trichotomy:
    """Classify a planar graph of order m+1 and maximum degree m by its number of degree-m vertices."""
    if m < 3 or g.n != m + 1 or max(g.degrees(), default=0) != m:
        raise ValueError("needs order m+1, maximum degree m, and m >= 3")
    if not is_planar(g):
        raise ValueError("needs a planar graph")
    count = sum(1 for d in g.degrees() if d == m)
    if count == 4 and m == 3:
        return Trichotomy.FOUR_AND_M3
    if count == 3 and m == 4:
        return Trichotomy.THREE_AND_M4
    if count <= 2:
        return Trichotomy.AT_MOST_TWO
    raise LemmaViolation(f"planar graph of order {m + 1} with {count} vertices of degree {m}")


def outerplanar_degree2_pair(g: SimpleGraph) -> tuple[int, int]:
    """Two non-adjacent vertices of degree exactly two (lexicographically first pair)."""
    if g.n < 4 or min(g.degrees()) < 2:
        raise ValueError("needs at least 4 vertices and minimum degree 2")
    if not is_outerplanar(g):
        raise ValueError("needs an outerplanar graph")
    deg2 = [v for v in range(g.n) if g.degree(v) == 2]
    for i, u in enumerate(deg2):
        for v in deg2[i + 1 :]:
            if not g.has_edge(u, v):
                return u, v
    raise LemmaViolation("outerplanar graph without two non-adjacent degree-2 vertices")
