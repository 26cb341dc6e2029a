"""Planarity testing with rotation-system output.

Each biconnected block is embedded by path addition (Demoucron, Malgrange
and Pertuiset): start from a cycle, repeatedly pick a bridge of the embedded
part, and route a path of it through a face containing all its attachment
vertices.  Faces are kept as oriented vertex cycles so the rotation system
falls out directly.  Blocks are glued at cut vertices by concatenating their
local rotations.  Quadratic, which is plenty for n <= 64.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import GraphError, SimpleGraph, components, from_edge_list

Face = list[int]


@dataclass(frozen=True)
class PlanarEmbedding:
    """Rotation system: ``rotation[v]`` is the cyclic order of ``v``'s neighbours."""

    host: SimpleGraph
    rotation: tuple[tuple[int, ...], ...]

    def successor(self, v: int, u: int) -> int:
        rot = self.rotation[v]
        return rot[(rot.index(u) + 1) % len(rot)]


def biconnected_blocks(nbrs: list[list[int]]) -> list[list[tuple[int, int]]]:
    """Edge sets of the blocks (Hopcroft-Tarjan, iterative)."""
    n = len(nbrs)
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[tuple[int, int]]] = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0 or not nbrs[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, 0)]
        while stack:
            v, parent, idx = stack[-1]
            if idx < len(nbrs[v]):
                stack[-1] = (v, parent, idx + 1)
                w = nbrs[v][idx]
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= disc[parent]:
                        block = []
                        while True:
                            e = edge_stack.pop()
                            block.append(e)
                            if e == (parent, v):
                                break
                        blocks.append(block)
    return blocks


def _find_cycle(nbrs: dict[int, list[int]]) -> list[int]:
    u = min(nbrs)
    v = nbrs[u][0]
    # shortest v -> u path avoiding the edge uv closes a cycle
    prev = {v: v}
    queue = deque([v])
    while queue:
        a = queue.popleft()
        for b in nbrs[a]:
            if (a == v and b == u) or b in prev:
                continue
            prev[b] = a
            if b == u:
                queue.clear()
                break
            queue.append(b)
    path = [u]
    while path[-1] != v:
        path.append(prev[path[-1]])
    return path


def _embed_block(edges: list[tuple[int, int]]) -> list[Face] | None:
    """Oriented faces of a planar embedding of a 2-connected block, or None."""
    nbrs: dict[int, list[int]] = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    for lst in nbrs.values():
        lst.sort()
    nv, ne = len(nbrs), len(edges)
    if ne == 1:
        a, b = edges[0]
        return [[a, b]]
    if ne > 3 * nv - 6:
        return None
    cycle = _find_cycle(nbrs)
    faces: list[Face] = [cycle, cycle[::-1]]
    face_sets = [set(cycle), set(cycle)]
    placed = set(cycle)
    used = {frozenset((cycle[i], cycle[i - 1])) for i in range(len(cycle))}
    while len(used) < ne:
        fragments = []  # (attachments, path-finder payload)
        for a, b in edges:
            if frozenset((a, b)) not in used and a in placed and b in placed:
                fragments.append(({a, b}, ("edge", a, b)))
        seen: set[int] = set()
        for s in nbrs:
            if s in placed or s in seen:
                continue
            comp = {s}
            stack = [s]
            attach = set()
            while stack:
                x = stack.pop()
                for y in nbrs[x]:
                    if y in placed:
                        attach.add(y)
                    elif y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            fragments.append((attach, ("comp", comp)))
        choice = None
        for attach, payload in fragments:
            admissible = [i for i, fs in enumerate(face_sets) if attach <= fs]
            if not admissible:
                return None
            if choice is None or len(admissible) == 1:
                choice = (attach, payload, admissible[0])
                if len(admissible) == 1:
                    break
        assert choice is not None
        attach, payload, fi = choice
        if payload[0] == "edge":
            path = [payload[1], payload[2]]
        else:
            path = _fragment_path(nbrs, payload[1], attach, placed)
        face = faces[fi]
        i, j = face.index(path[0]), face.index(path[-1])
        inner = path[1:-1]
        k = len(face)
        arc_ij = [face[(i + t) % k] for t in range((j - i) % k + 1)]
        arc_ji = [face[(j + t) % k] for t in range((i - j) % k + 1)]
        f1 = arc_ij + inner[::-1]
        f2 = arc_ji + inner
        faces[fi] = f1
        face_sets[fi] = set(f1)
        faces.append(f2)
        face_sets.append(set(f2))
        placed.update(inner)
        for t in range(len(path) - 1):
            used.add(frozenset((path[t], path[t + 1])))
    return faces


def _fragment_path(nbrs: dict[int, list[int]], comp: set[int], attach: set[int], placed: set[int]) -> list[int]:
    a = min(attach)
    start = next(y for y in nbrs[a] if y in comp)
    prev = {start: a}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in nbrs[x]:
            if y in placed and y != a:
                path = [y, x]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                return path[::-1]
            if y in comp and y not in prev:
                prev[y] = x
                queue.append(y)
    raise AssertionError("fragment of a 2-connected block has a single attachment")


def embed_adjacency(nbrs: list[list[int]]) -> list[list[int]] | None:
    """Rotation lists for the graph with neighbour lists ``nbrs``, or None."""
    n = len(nbrs)
    rotation: list[list[int]] = [[] for _ in range(n)]
    for block in biconnected_blocks(nbrs):
        faces = _embed_block(block)
        if faces is None:
            return None
        if len(block) == 1:
            a, b = block[0]
            rotation[a].append(b)
            rotation[b].append(a)
            continue
        succ: dict[int, dict[int, int]] = {}
        for face in faces:
            k = len(face)
            for t in range(k):
                succ.setdefault(face[t], {})[face[t - 1]] = face[(t + 1) % k]
        for v, nxt in succ.items():
            start = min(nxt)
            cyc = [start]
            w = nxt[start]
            while w != start:
                cyc.append(w)
                w = nxt[w]
            assert len(cyc) == len(nxt), "block rotation is not a single cycle"
            rotation[v].extend(cyc)
    return rotation


def test_planarity(g: SimpleGraph) -> PlanarEmbedding | None:
    """A planar embedding of ``g``, or None when ``g`` is non-planar."""
    rotation = embed_adjacency([list(g.neighbors(v)) for v in range(g.n)])
    if rotation is None:
        return None
    return PlanarEmbedding(g, tuple(tuple(r) for r in rotation))


# pytest must not collect the function above as a test
test_planarity.__test__ = False  # type: ignore[attr-defined]


def is_planar(g: SimpleGraph) -> bool:
    return test_planarity(g) is not None


def is_planar_masks(adj: list[int] | tuple[int, ...]) -> bool:
    """Planarity of a graph given as neighbour bitmasks (search hot path)."""
    n = len(adj)
    e2 = 0
    nbrs: list[list[int]] = []
    for mask in adj:
        lst = []
        while mask:
            low = mask & -mask
            lst.append(low.bit_length() - 1)
            mask ^= low
        e2 += len(lst)
        nbrs.append(lst)
    active = sum(1 for lst in nbrs if lst)
    if active >= 3 and e2 // 2 > 3 * active - 6:
        return False
    for block in biconnected_blocks(nbrs):
        if len(block) >= 9 and _embed_block(block) is None:
            return False
    return True


def faces(emb: PlanarEmbedding) -> list[Face]:
    """Facial walks of the embedding of a connected host.

    Each walk lists the tails of its darts in traversal order, so its length
    is the face length (bridges are counted twice).
    """
    g = emb.host
    if g.n == 0 or len(components(g)) != 1:
        raise GraphError("faces() needs a connected host; embed each component separately")
    if g.num_edges == 0:
        return [[0]]
    seen: set[tuple[int, int]] = set()
    out = []
    for u in range(g.n):
        for v in emb.rotation[u]:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = b, emb.successor(b, a)
            out.append(walk)
    return out


def is_outerplanar(g: SimpleGraph) -> bool:
    """Outerplanar iff adding a vertex adjacent to everything keeps it planar."""
    return is_planar(g.add_vertex(range(g.n)))


def check_embedding(emb: PlanarEmbedding) -> None:
    """Raise AssertionError unless the rotation system is a valid planar one."""
    g = emb.host
    for v in range(g.n):
        assert sorted(emb.rotation[v]) == list(g.neighbors(v)), f"bad rotation at {v}"
    for comp in components(g):
        sub, keep = g.induced(comp)
        index = {old: new for new, old in enumerate(keep)}
        rot = tuple(tuple(index[w] for w in emb.rotation[old]) for old in keep)
        fs = faces(PlanarEmbedding(sub, rot))
        assert sum(len(f) for f in fs) == 2 * sub.num_edges or sub.num_edges == 0
        assert sub.n - sub.num_edges + len(fs) == 2, "Euler characteristic is not 2"


def apex_graph(g: SimpleGraph) -> SimpleGraph:
    return from_edge_list(g.n + 1, list(g.edges) + [(v, g.n) for v in range(g.n)])
