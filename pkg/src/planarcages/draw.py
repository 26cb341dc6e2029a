"""Straight-line drawings by barycentric relaxation, rendered as SVG.

The longest facial walk of a planar embedding is pinned to a regular
polygon and every other vertex is repeatedly moved to the average of its
neighbours (Gauss-Seidel sweeps).  For 3-connected graphs the fixed point is
Tutte's crossing-free drawing.  Other inputs are padded to a triangulated
disk first, and a degeneracy check is the final gate.
"""

from __future__ import annotations

import math

from .graph import GraphError, SimpleGraph, from_edge_list, is_connected
from .planarity import faces, test_planarity

Point = tuple[float, float]


class DrawingError(ValueError):
    pass


def layout(g: SimpleGraph, max_iter: int = 200, tol: float = 1e-7, extra_iter: int = 20000) -> list[Point]:
    """Unit-square coordinates for a crossing-free straight-line drawing of ``g``.

    The graph is first padded to a 2-connected planar supergraph and every
    inner face then gets a helper vertex joined to its boundary, so the
    relaxation works on a triangulated disk; padding and helpers are
    dropped from the result. Runs ``max_iter``
    sweeps (or until no vertex moves more than ``tol``) and, if the drawing
    is still degenerate, up to ``extra_iter`` more before giving up.
    """
    if g.n == 0 or not is_connected(g):
        raise DrawingError("drawing needs a non-empty connected graph")
    emb = test_planarity(g)
    if emb is None:
        raise DrawingError("graph is not planar")
    if g.n == 1:
        return [(0.5, 0.5)]
    walks = _biconnect(g)
    outer_walk = max(walks, key=len)
    outer = list(outer_walk)
    nbrs: list[list[int]] = [list(g.neighbors(v)) for v in range(g.n)]
    for f in walks:
        if f is outer_walk:
            continue
        helper = len(nbrs)
        nbrs.append(list(f))
        for v in f:
            nbrs[v].append(helper)
    pos: list[Point] = [(0.5, 0.5)] * len(nbrs)
    k = len(outer)
    for idx, v in enumerate(outer):
        ang = 2 * math.pi * idx / k + math.pi / 2
        pos[v] = (0.5 + 0.5 * math.cos(ang), 0.5 + 0.5 * math.sin(ang))
    fixed = set(outer)
    inner = [v for v in range(len(nbrs)) if v not in fixed]

    def sweep() -> float:
        moved = 0.0
        for v in inner:
            nb = nbrs[v]
            x = sum(pos[w][0] for w in nb) / len(nb)
            y = sum(pos[w][1] for w in nb) / len(nb)
            moved = max(moved, abs(x - pos[v][0]), abs(y - pos[v][1]))
            pos[v] = (x, y)
        return moved

    for _ in range(max_iter):
        if sweep() < tol:
            break
    if not _clean(g, pos):
        for _ in range(extra_iter):
            if sweep() < 1e-13:
                break
    if not _clean(g, pos):
        raise DrawingError("relaxation did not reach a crossing-free drawing")
    return pos[: g.n]


def _biconnect(g: SimpleGraph) -> list[list[int]]:
    """Faces of a 2-connected planar supergraph of ``g`` (extra edges are never drawn).

    While some facial walk revisits a vertex v, the two walk neighbours of
    one visit are joined across the corner at v; the new edge lies inside
    that face, so planarity is kept.
    """
    h = g
    while True:
        emb = test_planarity(h)
        assert emb is not None
        walks = faces(emb)
        if h.n < 3 or all(len(set(f)) == len(f) for f in walks):
            return walks
        for f in walks:
            k = len(f)
            seen = [i for i in range(k) if f.count(f[i]) > 1]
            pair = next(
                ((f[i - 1], f[(i + 1) % k]) for i in seen if f[i - 1] != f[(i + 1) % k] and not h.has_edge(f[i - 1], f[(i + 1) % k])),
                None,
            )
            if pair is not None:
                h = from_edge_list(h.n, list(h.edges) + [pair])
                break
        else:
            raise DrawingError("could not make the graph 2-connected")


def _clean(g: SimpleGraph, pos: list[Point], eps: float = 1e-9) -> bool:
    """No crossings, no coincident vertices, no vertex inside a non-incident edge."""
    if crossings(g, pos, eps):
        return False
    pts = pos[: g.n]
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if abs(pts[i][0] - pts[j][0]) < 1e-7 and abs(pts[i][1] - pts[j][1]) < 1e-7:
                return False
    for a, b in g.edges:
        pa, pb = pts[a], pts[b]
        length = math.dist(pa, pb)
        for v in range(g.n):
            if v in (a, b):
                continue
            pv = pts[v]
            if abs(_orient(pa, pb, pv)) <= 1e-9 * max(length, 1e-12) and min(pa[0], pb[0]) - 1e-12 <= pv[0] <= max(pa[0], pb[0]) + 1e-12 and min(pa[1], pb[1]) - 1e-12 <= pv[1] <= max(pa[1], pb[1]) + 1e-12:
                return False
    return True


def _orient(a: Point, b: Point, c: Point) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def crossings(g: SimpleGraph, pos: list[Point], eps: float = 1e-9) -> int:
    """Number of edge pairs without a common endpoint whose segments properly cross."""
    count = 0
    edges = g.edges
    for i in range(len(edges)):
        a, b = edges[i]
        pa, pb = pos[a], pos[b]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if len({a, b, c, d}) < 4:
                continue
            pc, pd = pos[c], pos[d]
            d1 = _orient(pa, pb, pc)
            d2 = _orient(pa, pb, pd)
            d3 = _orient(pc, pd, pa)
            d4 = _orient(pc, pd, pb)
            if d1 * d2 < -eps and d3 * d4 < -eps:
                count += 1
    return count


def to_svg(g: SimpleGraph, pos: list[Point], size: int = 480, margin: int = 24) -> str:
    span = size - 2 * margin

    def sc(p: Point) -> tuple[str, str]:
        return f"{margin + p[0] * span:.3f}", f"{margin + (1 - p[1]) * span:.3f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<g stroke="black" stroke-width="1.2">',
    ]
    for u, v in g.edges:
        x1, y1 = sc(pos[u])
        x2, y2 = sc(pos[v])
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    out.append('<g fill="black">')
    for v in range(g.n):
        x, y = sc(pos[v])
        out.append(f'<circle id="v{v}" cx="{x}" cy="{y}" r="3.5"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def draw_svg(g: SimpleGraph) -> str:
    try:
        pos = layout(g)
    except GraphError as exc:
        raise DrawingError(str(exc)) from None
    return to_svg(g, pos)
