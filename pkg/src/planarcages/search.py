"""Exhaustive isomorph-free search for planar (bi)regular graphs of given girth.

Graphs are grown in breadth-first order from a root of maximum degree.
Vertices are *completed* one at a time in label order: completing vertex
``i`` chooses its remaining neighbours among the already labelled,
unfinished vertices ``j > i`` and then attaches brand-new vertices, which
receive the next free labels.  Every connected graph with a vertex of the
root's degree has such a construction sequence, so the tree is complete; it
is not isomorph-free on its own, so leaves are deduplicated by canonical
form.

Pruning (all of it sound for graphs that are planar with girth >= g):

* twin classes: unfinished vertices with identical neighbourhoods are
  interchangeable, so only the lowest labels of a class are ever chosen;
* girth: an edge ``ij`` is only added when ``dist(i, j) >= g - 1``;
* degree bookkeeping: each vertex must end with an allowed degree, the
  number of maximum-degree vertices is capped by the face-counting bound,
  and a vertex that can no longer reach degree ``r`` kills the branch;
* planarity of the partial graph after each completion that added an edge
  between labelled vertices (planarity is closed under subgraphs);
* when every admissible degree split forces ``e = 3n - 6`` (girth 3), the
  result must be a triangulation, so every edge at a finished vertex needs
  two common neighbours that are still achievable.

The subtrees below a fixed completion depth are independent tasks; they can
be farmed out to worker processes and checkpointed.  Results are merged as
a sorted list of canonical forms, so output does not depend on scheduling.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .bounds import CageParams, InfeasibleTriplet, biregular_feasible, feasible_splits, planar_lower_bound
from .canon import canonical_form
from .graph import MAX_ORDER, GraphError, SimpleGraph, decode_graph6, encode_graph6, from_edge_list, girth
from .planarity import is_planar, is_planar_masks


class SearchError(RuntimeError):
    pass


@dataclass
class SearchOutcome:
    params: CageParams
    mode: str
    exhaustive: bool
    graphs: list[str]
    orders_scanned: list[int]
    order: Optional[int] = None
    elapsed: float = 0.0
    nodes: int = 0
    skipped_orders: list[int] = field(default_factory=list)

    def decoded(self) -> list[SimpleGraph]:
        return [decode_graph6(s) for s in self.graphs]

    def render(self) -> str:
        """Stable text form; no timings so that output is reproducible."""
        lines = [
            f"params: {self.params}",
            f"mode: {self.mode}",
            f"orders_scanned: {' '.join(map(str, self.orders_scanned)) or '-'}",
            f"pruned_orders: {' '.join(map(str, self.skipped_orders)) or '-'}",
            f"order: {self.order if self.order is not None else 'not found'}",
            f"nodes: {self.nodes}",
            f"{len(self.graphs)} graphs, {'exhaustive' if self.exhaustive else 'NOT exhaustive'}",
        ]
        lines.extend(self.graphs)
        return "\n".join(lines) + "\n"


# --- admissible degree splits ---------------------------------------------


def allowed_x(params: CageParams, n: int, edge_bound: bool = True) -> list[int]:
    """Admissible numbers of maximum-degree vertices at order n.

    For a regular query the list is ``[n]`` when nk is even and the
    face-counting edge bound holds, else empty. ``edge_bound=False`` drops
    the edge bound for regular queries so the search itself has to rule
    the order out.
    """
    g = params.g
    if params.is_regular:
        k = params.k
        assert k is not None
        if n < k + 1 or (n * k) % 2:
            return []
        e = n * k // 2
        if edge_bound and n >= 3 and e * (g - 2) > g * (n - 2):
            return []
        return [n]
    assert params.r is not None and params.m is not None
    if n < params.m + 1:
        return []
    return [x for x, _ in feasible_splits(params.r, params.m, g, n)]


def parity_prune(r: int, m: int, g: int, n: int) -> bool:
    """True when some split x + y = n (x, y >= 1) passes the handshake parity and face-counting bounds."""
    return bool(feasible_splits(r, m, g, n))


# --- the engine -----------------------------------------------------------


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Engine:
    def __init__(self, params: CageParams, n: int, xs: list[int], forbid_disconnected: bool = True) -> None:
        self.n = n
        self.g = params.g
        self.regular = params.is_regular
        if params.is_regular:
            assert params.k is not None
            self.r = self.m = params.k
        else:
            assert params.r is not None and params.m is not None
            self.r, self.m = params.r, params.m
        self.xs = set(xs)
        self.x_max = max(xs)
        self.x_min = min(xs)
        sums = {x * self.m + (n - x) * self.r for x in xs}
        self.triangulation = self.g == 3 and n >= 4 and all(s == 2 * (3 * n - 6) for s in sums)
        self.connected_only = forbid_disconnected
        self.adj = [0] * n
        self.deg = [0] * n
        self.nxt = 0
        self.found: set[bytes] = set()
        self.nodes = 0

    # -- per-vertex caps

    def _x_committed(self, i: int) -> int:
        r, deg = self.r, self.deg
        if self.regular:
            return 0
        return sum(1 for v in range(self.nxt) if deg[v] > r or (v < i and deg[v] == self.m))

    def _cap(self, v: int, committed: int) -> int:
        if self.regular or self.deg[v] > self.r or committed < self.x_max:
            return self.m
        return self.r

    # -- setup / prefixes

    def root(self) -> None:
        self.adj = [0] * self.n
        self.deg = [0] * self.n
        self.nxt = 1

    def load(self, prefix: SimpleGraph) -> None:
        self.adj = list(prefix.adj) + [0] * (self.n - prefix.n)
        self.deg = prefix.degrees() + [0] * (self.n - prefix.n)
        self.nxt = prefix.n

    def snapshot(self) -> SimpleGraph:
        pairs = [(u, v) for u in range(self.nxt) for v in _bits(self.adj[u]) if u < v]
        return from_edge_list(self.nxt, pairs)

    # -- girth helper

    def _near(self, i: int) -> int:
        """Bitmask of vertices within distance g-2 of i (these cannot become neighbours)."""
        seen = frontier = 1 << i
        for _ in range(self.g - 2):
            nb = 0
            for v in _bits(frontier):
                nb |= self.adj[v]
            frontier = nb & ~seen
            if not frontier:
                break
            seen |= frontier
        return seen

    # -- checks after a completion

    def _viable(self, done: int, inner_edge: bool) -> bool:
        """State after completing vertices ``0..done-1``."""
        n, r, deg, adj, nxt = self.n, self.r, self.deg, self.adj, self.nxt
        if self.connected_only and done == nxt and nxt < n:
            return False
        committed = self._x_committed(done)
        if committed > self.x_max:
            return False
        if nxt == n:
            # every open vertex must still be able to reach degree r
            open_mask = 0
            for v in range(done, nxt):
                if deg[v] < self._cap(v, committed):
                    open_mask |= 1 << v
            for v in range(done, nxt):
                need = (r if deg[v] <= r else self.m) - deg[v]
                if need > 0:
                    avail = open_mask & ~adj[v] & ~(1 << v)
                    if self.g > 3:
                        avail &= ~self._near(v)
                    if bin(avail).count("1") < need:
                        return False
            if not self.regular and committed < self.x_min:
                growable = sum(1 for v in range(done, nxt) if deg[v] <= r and (open_mask >> v) & 1)
                if committed < self.x_max and committed + growable < self.x_min:
                    return False
        if self.triangulation and not self._triangle_rule(done, committed):
            return False
        if inner_edge and not is_planar_masks(adj[:nxt]):
            return False
        return True

    def _triangle_rule(self, done: int, committed: int) -> bool:
        adj, deg = self.adj, self.deg
        open_mask = 0
        for v in range(done, self.nxt):
            if deg[v] < self._cap(v, committed):
                open_mask |= 1 << v
        for u in range(done):
            nu = adj[u]
            for v in _bits(nu):
                common = nu & adj[v]
                if common & (common - 1):
                    continue  # already two
                if (open_mask >> v) & 1:
                    common |= nu & open_mask & ~(1 << v)
                if bin(common).count("1") < 2:
                    return False
        return True

    # -- completion of one vertex

    def _classes(self, cands: list[int]) -> list[list[int]]:
        adj = self.adj
        classes: list[list[int]] = []
        for j in cands:
            for cl in classes:
                a = cl[0]
                if adj[a] & ~(1 << j) == adj[j] & ~(1 << a):
                    cl.append(j)
                    break
            else:
                classes.append([j])
        return classes

    def _targets(self, i: int, committed: int) -> list[int]:
        if i == 0 or self.regular:
            return [self.m]
        if self.deg[i] > self.r or committed >= self.x_max:
            return [self.r] if self.deg[i] <= self.r else [self.m]
        return [self.r, self.m]

    def expand(self, i: int) -> Iterator[bool]:
        """Enumerate completions of vertex ``i`` in place; yields once per child state.

        The yielded flag tells whether an edge between labelled vertices was added.
        State is restored when the generator is exhausted or closed.
        """
        adj, deg = self.adj, self.deg
        committed = self._x_committed(i)
        targets = self._targets(i, committed)
        top = max(targets)
        if deg[i] > top:
            return
        cands = [j for j in range(i + 1, self.nxt) if not (adj[i] >> j) & 1 and deg[j] < self._cap(j, committed)]
        classes = self._classes(cands)
        yield from self._choose(i, classes, 0, targets, top, False)

    def _choose(self, i: int, classes: list[list[int]], ci: int, targets: list[int], top: int, inner: bool) -> Iterator[bool]:
        adj, deg = self.adj, self.deg
        if ci == len(classes):
            yield from self._attach_new(i, targets, inner)
            return
        cl = classes[ci]
        # count 0 from this class
        yield from self._choose(i, classes, ci + 1, targets, top, inner)
        added: list[int] = []
        try:
            for j in cl:
                if deg[i] >= top:
                    break
                if self.g > 3 and (self._near(i) >> j) & 1:
                    break
                if deg[j] >= self.m:
                    break
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                deg[i] += 1
                deg[j] += 1
                added.append(j)
                yield from self._choose(i, classes, ci + 1, targets, top, True)
        finally:
            for j in added:
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)
                deg[i] -= 1
                deg[j] -= 1

    def _attach_new(self, i: int, targets: list[int], inner: bool) -> Iterator[bool]:
        adj, deg = self.adj, self.deg
        room = self.n - self.nxt
        for t in targets:
            c = t - deg[i]
            if c < 0 or c > room:
                continue
            base = self.nxt
            for v in range(base, base + c):
                adj[i] |= 1 << v
                adj[v] = 1 << i
                deg[v] = 1
            deg[i] += c
            self.nxt = base + c
            try:
                yield inner
            finally:
                for v in range(base, base + c):
                    adj[v] = 0
                    deg[v] = 0
                adj[i] &= ~(((1 << c) - 1) << base)
                deg[i] -= c
                self.nxt = base

    # -- drivers

    def run(self, i: int) -> None:
        """Explore everything below the state where vertices ``0..i-1`` are complete."""
        if i == self.n:
            self._leaf()
            return
        if i >= self.nxt:
            return
        for inner in self.expand(i):
            self.nodes += 1
            if self._viable(i + 1, inner):
                self.run(i + 1)

    def prefixes(self, i: int, depth: int) -> Iterator[SimpleGraph]:
        """Viable states with exactly ``depth`` completed vertices, below state ``i``."""
        if i == depth or i == self.n:
            yield self.snapshot()
            return
        if i >= self.nxt:
            return
        for inner in self.expand(i):
            self.nodes += 1
            if self._viable(i + 1, inner):
                yield from self.prefixes(i + 1, depth)

    def _leaf(self) -> None:
        deg = self.deg
        if self.nxt != self.n:
            return
        if self.regular:
            if any(d != self.m for d in deg):
                return
        else:
            x = sum(1 for d in deg if d == self.m)
            if any(d not in (self.r, self.m) for d in deg) or x not in self.xs or x == self.n:
                return
        g = self.snapshot()
        if girth(g) != self.g or not is_planar(g):
            return
        self.found.add(canonical_form(g))


# --- task-level API -------------------------------------------------------

DEFAULT_SPLIT_DEPTH = 3


def _check_query(params: CageParams, n: int) -> None:
    if n > MAX_ORDER:
        raise GraphError(f"search supports n <= {MAX_ORDER}, got {n}")
    if not params.is_regular:
        assert params.r is not None and params.m is not None
        if not biregular_feasible(params.r, params.m, params.g):
            raise InfeasibleTriplet(f"{params} admits no planar graph")


def _run_task(args: tuple[CageParams, int, list[int], bytes, int, bool]) -> tuple[bytes, list[bytes], int]:
    params, n, xs, prefix_g6, depth, connected = args
    eng = _Engine(params, n, xs, connected)
    prefix = decode_graph6(prefix_g6)
    eng.load(prefix)
    eng.run(min(depth, n))
    return prefix_g6, sorted(eng.found), eng.nodes


def _read_checkpoint(path: str, header: str) -> dict[bytes, list[bytes]]:
    done: dict[bytes, list[bytes]] = {}
    if not os.path.exists(path):
        return done
    with open(path, "rb") as fh:
        lines = fh.read().decode("ascii").splitlines()
    if not lines:
        return done
    if lines[0] != header:
        raise SearchError(f"checkpoint {path} belongs to a different query: {lines[0]!r}")
    for ln in lines[1:]:
        if not ln.strip():
            continue
        parts = ln.split("\t")
        if len(parts) != 2:
            raise SearchError(f"corrupt checkpoint line: {ln!r}")
        key, vals = parts
        try:
            decode_graph6(key)
            graphs = [] if vals == "-" else [v.encode("ascii") for v in vals.split(",")]
            for gr in graphs:
                decode_graph6(gr)
        except GraphError as exc:
            raise SearchError(f"corrupt checkpoint line: {ln!r} ({exc})") from None
        done[key.encode("ascii")] = graphs
    return done


def enumerate_graphs(
    params: CageParams,
    n: int,
    *,
    workers: int = 1,
    checkpoint: Optional[str] = None,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
    connected: bool = True,
    edge_bound: bool = True,
) -> SearchOutcome:
    """All isomorphism classes of planar graphs of order n and girth exactly g
    with the requested degrees (both present for biregular queries)."""
    _check_query(params, n)
    start = time.perf_counter()
    xs = allowed_x(params, n, edge_bound)
    if not xs:
        return SearchOutcome(params, f"enumerate n={n}", True, [], [], None, time.perf_counter() - start, 0, [n])
    if not connected:
        return _enumerate_disconnected(params, n, start)
    eng = _Engine(params, n, xs)
    eng.root()
    tasks = [encode_graph6(p) for p in eng.prefixes(0, split_depth)]
    nodes = eng.nodes
    header = f"# planarcages search {params} n={n} depth={split_depth}"
    done = _read_checkpoint(checkpoint, header) if checkpoint else {}
    found: set[bytes] = set()
    todo = []
    for t in tasks:
        if t in done:
            found.update(done[t])
        else:
            todo.append((params, n, xs, t, split_depth, True))
    fh = None
    if checkpoint:
        fresh = not os.path.exists(checkpoint) or os.path.getsize(checkpoint) == 0
        fh = open(checkpoint, "a", encoding="ascii")
        if fresh:
            fh.write(header + "\n")
            fh.flush()
    try:
        if workers <= 1 or len(todo) <= 1:
            results: Iterable = map(_run_task, todo)
            for key, graphs, k in results:
                found.update(graphs)
                nodes += k
                _record(fh, key, graphs)
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for key, graphs, k in pool.map(_run_task, todo, chunksize=1):
                    found.update(graphs)
                    nodes += k
                    _record(fh, key, graphs)
    finally:
        if fh:
            fh.close()
    graphs = sorted(f.decode("ascii") for f in found)
    return SearchOutcome(params, f"enumerate n={n}", True, graphs, [n], n if graphs else None, time.perf_counter() - start, nodes)


def _record(fh, key: bytes, graphs: list[bytes]) -> None:
    if fh is None:
        return
    vals = ",".join(g.decode("ascii") for g in graphs) or "-"
    fh.write(f"{key.decode('ascii')}\t{vals}\n")
    fh.flush()


def _enumerate_disconnected(params: CageParams, n: int, start: float) -> SearchOutcome:
    """Audit mode: also allow disconnected graphs by combining connected pieces.

    A disconnected graph's components each have girth >= g, degrees in the
    allowed set, and at least one has girth exactly g; only regular or
    single-degree pieces can appear alongside a biregular one.
    """
    pieces: dict[int, set[bytes]] = {}
    degsets: list[CageParams] = [params]
    if not params.is_regular:
        assert params.r is not None and params.m is not None
        degsets = [params, CageParams.regular(params.r, params.g), CageParams.regular(params.m, params.g)]
    for size in range(1, n + 1):
        acc: set[bytes] = set()
        for q in degsets:
            for gi in range(q.g, 3 * n + 1):
                if gi > size:
                    break
                qq = CageParams(g=gi, k=q.k, r=q.r, m=q.m)
                try:
                    out = enumerate_graphs(qq, size, split_depth=0)
                except InfeasibleTriplet:
                    continue
                acc.update(s.encode("ascii") for s in out.graphs)
        pieces[size] = acc
    results: set[bytes] = set()

    def combine(remaining: int, min_size: int, chosen: list[SimpleGraph]) -> None:
        if remaining == 0:
            if len(chosen) < 2:
                return
            pairs = []
            off = 0
            for c in chosen:
                pairs += [(u + off, v + off) for u, v in c.edges]
                off += c.n
            g = from_edge_list(off, pairs)
            degs = set(g.degrees())
            want = set(params.degrees)
            if degs == want and girth(g) == params.g:
                results.add(canonical_form(g))
            return
        for size in range(min_size, remaining + 1):
            for s in sorted(pieces.get(size, ())):
                combine(remaining - size, size, chosen + [decode_graph6(s)])

    combine(n, 1, [])
    graphs = sorted(r.decode("ascii") for r in results)
    return SearchOutcome(params, f"enumerate n={n} (disconnected only)", True, graphs, [n], None, time.perf_counter() - start)


def min_order(
    params: CageParams,
    n_max: int,
    *,
    workers: int = 1,
    start: Optional[int] = None,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> SearchOutcome:
    """Smallest n <= n_max admitting a graph, with all classes at that order."""
    t0 = time.perf_counter()
    if start is None:
        if params.is_regular:
            assert params.k is not None
            start = max(params.k + 1, params.g)
        else:
            assert params.r is not None and params.m is not None
            start = planar_lower_bound(params.r, params.m, params.g).lower
            assert start is not None
    scanned: list[int] = []
    skipped: list[int] = []
    nodes = 0
    for n in range(start, n_max + 1):
        if not allowed_x(params, n):
            skipped.append(n)
            continue
        out = enumerate_graphs(params, n, workers=workers, split_depth=split_depth)
        scanned.append(n)
        nodes += out.nodes
        if out.graphs:
            return SearchOutcome(params, f"min_order n<={n_max}", True, out.graphs, scanned, n, time.perf_counter() - t0, nodes, skipped)
    return SearchOutcome(params, f"min_order n<={n_max}", True, [], scanned, None, time.perf_counter() - t0, nodes, skipped)


def verify_uniqueness(params: CageParams, expected: list[SimpleGraph], *, workers: int = 1) -> bool:
    """True iff the cages are exactly the given classes (and none is smaller)."""
    if not expected:
        raise ValueError("expected list must be non-empty")
    orders = {g.n for g in expected}
    if len(orders) != 1:
        return False
    n = orders.pop()
    out = min_order(params, n, workers=workers)
    if not out.exhaustive:
        raise SearchError("search was not exhaustive")
    want = sorted({canonical_form(g).decode("ascii") for g in expected})
    return out.order == n and out.graphs == want
