"""Simple undirected graphs on dense integer labels.

Every other module passes :class:`SimpleGraph` values around.  Graphs are
immutable; adjacency is kept both as sorted neighbour tuples (deterministic
iteration) and as integer bitmasks (fast set algebra in the search).
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable

MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62

INF = math.inf


class GraphError(ValueError):
    """Raised for malformed graph input (loops, bad endpoints, bad encodings)."""


@dataclass(frozen=True)
class SimpleGraph:
    """A loop-free, multi-edge-free undirected graph on vertices ``0..n-1``.

    ``edges`` holds pairs ``(u, v)`` with ``u < v`` in ascending order.  Use
    :func:`from_edge_list` to build one from arbitrary input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _nbrs: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(masks))
        object.__setattr__(self, "_nbrs", tuple(tuple(_bits(a)) for a in masks))

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._nbrs]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced(self, vertices: Iterable[int]) -> tuple[SimpleGraph, list[int]]:
        """Induced subgraph, relabelled densely; also returns new->old labels."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        pairs = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return from_edge_list(len(keep), pairs), keep

    def relabel(self, perm: list[int]) -> SimpleGraph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def add_vertex(self, neighbours: Iterable[int] = ()) -> SimpleGraph:
        """A copy with one extra vertex ``n`` joined to ``neighbours``."""
        return from_edge_list(self.n + 1, list(self.edges) + [(v, self.n) for v in neighbours])

    def __str__(self) -> str:
        return f"SimpleGraph(n={self.n}, e={self.num_edges})"


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> SimpleGraph:
    """Build a graph, dropping duplicate pairs; loops and bad endpoints raise."""
    if n < 0:
        raise GraphError(f"negative order {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    return SimpleGraph(n, tuple(sorted(seen)))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, ())


def cycle_graph(n: int) -> SimpleGraph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> SimpleGraph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    pairs = []
    offset = 0
    for g in graphs:
        pairs.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return from_edge_list(offset, pairs)


def degree_profile(g: SimpleGraph) -> dict[int, int]:
    """Map degree -> number of vertices with that degree (sorted by degree)."""
    return dict(sorted(Counter(g.degrees()).items()))


def girth(g: SimpleGraph) -> int | float:
    """Length of a shortest cycle, or ``math.inf`` for a forest.

    BFS from every vertex; a non-tree edge ``(u, w)`` seen from root ``s``
    closes a closed walk of length ``d(u) + d(w) + 1`` which contains a cycle
    no longer than that, and the minimum over all roots is attained exactly.
    """
    best: int | float = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_biregular(g: SimpleGraph, r: int, m: int) -> bool:
    """True iff every degree is ``r`` or ``m`` and both occur."""
    prof = degree_profile(g)
    return set(prof) == {r, m}


def is_regular(g: SimpleGraph, k: int) -> bool:
    return g.n > 0 and all(d == k for d in g.degrees())


def components(g: SimpleGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: SimpleGraph) -> bool:
    return len(components(g)) == 1


# --- serialisation ---------------------------------------------------------


def encode_graph6(g: SimpleGraph) -> bytes:
    """graph6 bytes (no header, no newline); orders above 62 are rejected."""
    if g.n > GRAPH6_MAX_ORDER:
        raise GraphError(f"graph6 encoder supports n <= {GRAPH6_MAX_ORDER}, got {g.n}")
    bits = []
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            bits.append(aj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = bytearray([g.n + 63])
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> SimpleGraph:
    if isinstance(data, str):
        data = data.encode("ascii")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<") :]
    if not data:
        raise GraphError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise GraphError("graph6 bytes must lie in 63..126")
    if data[0] == 126:
        raise GraphError(f"graph6 extended size headers (n > {GRAPH6_MAX_ORDER}) are not supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise GraphError(f"graph6 body too short for n={n}")
    if len(body) > nbytes:
        raise GraphError("trailing garbage after graph6 body")
    bits = []
    for c in body:
        val = c - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphError("non-zero graph6 padding bits")
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return from_edge_list(n, pairs)


def to_edgelist_text(g: SimpleGraph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edgelist_text(text: str) -> SimpleGraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 1:
        raise GraphError("edge list must start with a line holding the vertex count")
    try:
        n = int(rows[0][0])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    return from_edge_list(n, pairs)


def parse_graph_text(text: str) -> SimpleGraph:
    """Read either a single graph6 line or an edge list."""
    stripped = text.strip()
    if not stripped:
        raise GraphError("empty input")
    first = stripped.splitlines()[0].strip()
    if first.isdigit():
        return parse_edgelist_text(stripped)
    if len(stripped.splitlines()) != 1:
        raise GraphError("expected exactly one graph6 line")
    return decode_graph6(first)
