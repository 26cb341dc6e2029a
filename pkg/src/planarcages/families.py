"""Explicit constructions of planar regular and biregular graphs.

Each constructor documents its vertex labelling so that tests and drawings
are reproducible.  Parameter domains are checked up front and violations
raise ``ValueError``.
"""

from __future__ import annotations

from typing import Callable

from .graph import SimpleGraph, complete_bipartite, complete_graph, from_edge_list


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


# --- regular --------------------------------------------------------------

PLATONIC = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")


def platonic(name: str) -> SimpleGraph:
    """The five Platonic solids.

    cube: vertices are 3-bit strings, adjacent when they differ in one bit.
    octahedron: K6 minus the perfect matching {0,1},{2,3},{4,5}.
    dodecahedron: generalised Petersen graph GP(10, 2); outer 10-cycle 0..9,
    spokes i -> 10+i, inner star 10+i -> 10+(i+2 mod 10).
    icosahedron: top 0, upper pentagon 1..5, lower pentagon 6..10, bottom 11.
    """
    if name == "tetrahedron":
        return complete_graph(4)
    if name == "cube":
        return from_edge_list(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])
    if name == "octahedron":
        return from_edge_list(6, [(i, j) for i in range(6) for j in range(i + 1, 6) if j != i ^ 1])
    if name == "dodecahedron":
        pairs = []
        for i in range(10):
            pairs.append((i, (i + 1) % 10))
            pairs.append((i, 10 + i))
            pairs.append((10 + i, 10 + (i + 2) % 10))
        return from_edge_list(20, pairs)
    if name == "icosahedron":
        pairs = []
        for i in range(5):
            u, u1 = 1 + i, 1 + (i + 1) % 5
            lo, lo1 = 6 + i, 6 + (i + 1) % 5
            pairs += [(0, u), (u, u1), (lo, lo1), (lo, 11), (u, lo), (u, lo1)]
        return from_edge_list(12, pairs)
    raise ValueError(f"unknown Platonic solid {name!r}; choose from {', '.join(PLATONIC)}")


# --- girth 3 --------------------------------------------------------------


def windmill(l: int) -> SimpleGraph:
    """``l`` triangles on a common hub 0; blade i is (2i+1, 2i+2)."""
    _need(l >= 2, f"windmill needs l >= 2, got {l}")
    pairs = []
    for i in range(l):
        a, b = 2 * i + 1, 2 * i + 2
        pairs += [(0, a), (0, b), (a, b)]
    return from_edge_list(2 * l + 1, pairs)


def pinwheel(a: int) -> SimpleGraph:
    """``a`` triangles on the common edge 0-1; apexes are 2..a+1."""
    _need(a >= 2, f"pinwheel needs a >= 2 apexes, got {a}")
    pairs = [(0, 1)]
    for v in range(2, a + 2):
        pairs += [(0, v), (1, v)]
    return from_edge_list(a + 2, pairs)


def wheel(m: int) -> SimpleGraph:
    """Hub 0 joined to the rim cycle 1..m."""
    _need(m >= 3, f"wheel needs m >= 3, got {m}")
    pairs = [(0, v) for v in range(1, m + 1)]
    pairs += [(v, v % m + 1) for v in range(1, m + 1)]
    return from_edge_list(m + 1, pairs)


def multiwheel(*lengths: int) -> SimpleGraph:
    """Hub 0 joined to every vertex of disjoint cycles of the given lengths.

    ``multiwheel(m)`` is the wheel W_m. With two or more rims the hub has
    degree sum(lengths) and every rim vertex degree 3, so these are further
    ({3,m};3)-graphs of order m+1.
    """
    _need(len(lengths) >= 1 and all(c >= 3 for c in lengths), f"multiwheel needs cycle lengths >= 3, got {list(lengths)}")
    pairs = []
    start = 1
    for c in lengths:
        ring = list(range(start, start + c))
        pairs += [(0, v) for v in ring]
        pairs += [(ring[i], ring[(i + 1) % c]) for i in range(c)]
        start += c
    return from_edge_list(start, pairs)


def biwheel(rim: int) -> SimpleGraph:
    """Non-adjacent hubs 0 and 1 both joined to the rim cycle 2..rim+1."""
    _need(rim >= 3, f"biwheel needs rim >= 3, got {rim}")
    ring = list(range(2, rim + 2))
    pairs = [(h, v) for h in (0, 1) for v in ring]
    pairs += [(ring[i], ring[(i + 1) % rim]) for i in range(rim)]
    return from_edge_list(rim + 2, pairs)


def double_windmill(m: int) -> SimpleGraph:
    """Adjacent hubs 0, 1; pair i is (2i+2, 2i+3), an edge joined to both hubs."""
    _need(m >= 5 and m % 2 == 1, f"double windmill needs odd m >= 5, got {m}")
    pairs = [(0, 1)]
    for i in range((m - 1) // 2):
        a, b = 2 * i + 2, 2 * i + 3
        pairs += [(a, b), (0, a), (0, b), (1, a), (1, b)]
    return from_edge_list(m + 1, pairs)


def family_I(m: int) -> SimpleGraph:
    """Two fans glued by an alternating ladder.

    x = 0, x_i = 1+i, x' = m+1, x'_i = m+2+i for 0 <= i < m.
    """
    _need(m >= 6, f"I_m needs m >= 6, got {m}")
    x, xp = 0, m + 1

    def xi(i: int) -> int:
        return 1 + i % m

    def xpi(i: int) -> int:
        return m + 2 + i % m

    pairs = []
    for i in range(m):
        pairs += [(x, xi(i)), (xi(i), xi(i + 1)), (xp, xpi(i)), (xpi(i), xpi(i + 1))]
        pairs += [(xi(i), xpi(i)), (xi(i), xpi(i + 1))]
    return from_edge_list(2 * m + 2, pairs)


# --- girth 4 --------------------------------------------------------------


def k2m(m: int) -> SimpleGraph:
    """K_{2,m} with the two degree-m vertices labelled 0 and 1."""
    _need(m >= 3, f"K_2,m needs m >= 3, got {m}")
    return complete_bipartite(2, m)


def family_D(m: int) -> SimpleGraph:
    """2m-cycle x_0..x_{2m-1} (labels 0..2m-1); y_0 = 2m on the even x, y_1 = 2m+1 on the odd x."""
    _need(m >= 4, f"D_m needs m >= 4, got {m}")
    c = 2 * m
    pairs = [(i, (i + 1) % c) for i in range(c)]
    pairs += [(c, 2 * j) for j in range(m)]
    pairs += [(c + 1, 2 * j + 1) for j in range(m)]
    return from_edge_list(c + 2, pairs)


def gadget_F() -> SimpleGraph:
    """8-cycle x_0..x_7 (labels 0..7) and apex x = 8 on x_0, x_2, x_4."""
    pairs = [(i, (i + 1) % 8) for i in range(8)] + [(8, 0), (8, 2), (8, 4)]
    return from_edge_list(9, pairs)


def gadget_E4() -> SimpleGraph:
    """8-cycle x_0..x_7 with the chord x_0 x_4."""
    return from_edge_list(8, [(i, (i + 1) % 8) for i in range(8)] + [(0, 4)])


def _z_prime(k: int) -> tuple[list[tuple[int, int]], int, list[list[int]]]:
    """Edges and order of the chain F - P - E4 - P - ... - E4 - P - F.

    Also returns, for each E4 copy in chain order, the global labels of its
    x_0..x_7 so callers can smooth vertices inside it.
    """
    pairs: list[tuple[int, int]] = []
    nxt = 0
    e4_labels: list[list[int]] = []

    def place(g: SimpleGraph) -> list[int]:
        nonlocal nxt
        lab = list(range(nxt, nxt + g.n))
        nxt += g.n
        pairs.extend((lab[u], lab[v]) for u, v in g.edges)
        return lab

    def bridge(a: int, b: int) -> None:
        # path of length 2 whose ends are the existing vertices a and b
        nonlocal nxt
        mid = nxt
        nxt += 1
        pairs.extend([(a, mid), (mid, b)])

    first = place(gadget_F())
    tail = first[6]
    for _ in range(k - 2):
        lab = place(gadget_E4())
        e4_labels.append(lab)
        bridge(tail, lab[2])
        tail = lab[6]
    last = place(gadget_F())
    bridge(tail, last[6])
    return pairs, nxt, e4_labels


def _with_apex(n: int, pairs: list[tuple[int, int]]) -> SimpleGraph:
    base = from_edge_list(n, pairs)
    low = [v for v in range(n) if base.degree(v) == 2]
    return base.add_vertex(low)


def family_Z(k: int) -> SimpleGraph:
    """Gadget chain with an apex (label 9k+1) on every degree-2 vertex; m = 5k-1."""
    _need(k >= 3, f"Z_k needs k >= 3, got {k}")
    pairs, n, _ = _z_prime(k)
    assert n == 9 * k + 1
    return _with_apex(n, pairs)


def family_Z_general(m: int) -> SimpleGraph:
    """Apex degree ``m`` for any m > 14, from the chain for k = ceil((m+1)/5).

    The surplus m* - m <= 4 degree-2 vertices are smoothed out (removed with
    their two neighbours joined), two per E4 copy at x_1 and x_5, starting
    from the last E4 in the chain.  Labels are compacted afterwards.
    """
    _need(m > 14, f"Z_general needs m > 14, got {m}")
    k = -(-(m + 1) // 5)
    surplus = 5 * k - 1 - m
    pairs, n, e4s = _z_prime(k)
    edges = {frozenset(p) for p in pairs}
    drop: list[int] = []
    for lab in reversed(e4s):
        for pos in (1, 5):
            if len(drop) < surplus:
                v = lab[pos]
                a, b = lab[pos - 1], lab[pos + 1]
                edges -= {frozenset((a, v)), frozenset((v, b))}
                edges.add(frozenset((a, b)))
                drop.append(v)
    assert len(drop) == surplus
    keep = [v for v in range(n) if v not in drop]
    index = {v: i for i, v in enumerate(keep)}
    compact = [(index[a], index[b]) for a, b in (tuple(e) for e in edges)]
    return _with_apex(len(keep), compact)


# --- girth 5 and beyond ---------------------------------------------------


def family_P(m: int) -> SimpleGraph:
    """Hub c = 0 with spokes to v_i, a ring of 2m w's, 2m x's, m y's and apex z.

    Labels: c = 0; v_i = i (1..m); w_j = m + j (1..2m); x_j = 3m + j (1..2m);
    y_i = 5m + i (1..m); z = 6m + 1.
    """
    _need(m >= 4, f"P_m needs m >= 4, got {m}")

    def w(j: int) -> int:
        return m + (j - 1) % (2 * m) + 1

    def xx(j: int) -> int:
        return 3 * m + (j - 1) % (2 * m) + 1

    z = 6 * m + 1
    pairs = []
    for i in range(1, m + 1):
        y = 5 * m + i
        pairs += [(0, i), (i, w(2 * i - 1)), (i, w(2 * i)), (w(2 * i), w(2 * i + 1))]
        pairs += [(xx(2 * i - 1), xx(2 * i)), (y, xx(2 * i)), (y, xx(2 * i + 1)), (z, y)]
    for j in range(1, 2 * m + 1):
        pairs.append((w(j), xx(j)))
    return from_edge_list(6 * m + 2, pairs)


def family_O(m: int, g: int) -> SimpleGraph:
    """Poles 0 and 1 joined by m-1 paths of length ceil(g/2) and one of length floor(g/2)."""
    _need(m >= 3 and g >= 3, f"O needs m >= 3 and g >= 3, got m={m}, g={g}")
    pairs = []
    nxt = 2
    lengths = [(g + 1) // 2] * (m - 1) + [g // 2]
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            pairs.append((prev, nxt))
            prev = nxt
            nxt += 1
        pairs.append((prev, 1))
    return from_edge_list(nxt, pairs)


def family_F_cycles(m: int, g: int) -> SimpleGraph:
    """m/2 cycles of length g through the common vertex 0."""
    _need(m >= 4 and m % 2 == 0 and g >= 3, f"F_cycles needs even m >= 4 and g >= 3, got m={m}, g={g}")
    pairs = []
    nxt = 1
    for _ in range(m // 2):
        ring = [0] + list(range(nxt, nxt + g - 1))
        nxt += g - 1
        pairs += [(ring[i], ring[(i + 1) % g]) for i in range(g)]
    return from_edge_list(nxt, pairs)


# --- registry used by the CLI and by table reproduction -------------------

# name -> (constructor, number of integer arguments; -1 for one or more)
FAMILIES: dict[str, tuple[Callable[..., SimpleGraph], int]] = {
    "windmill": (windmill, 1),
    "pinwheel": (pinwheel, 1),
    "wheel": (wheel, 1),
    "multiwheel": (multiwheel, -1),
    "biwheel": (biwheel, 1),
    "double_windmill": (double_windmill, 1),
    "I": (family_I, 1),
    "D": (family_D, 1),
    "F": (gadget_F, 0),
    "E4": (gadget_E4, 0),
    "Z": (family_Z, 1),
    "Z_general": (family_Z_general, 1),
    "P": (family_P, 1),
    "O": (family_O, 2),
    "F_cycles": (family_F_cycles, 2),
    "K2m": (k2m, 1),
}


def build(name: str, args: list[str] | tuple) -> SimpleGraph:
    """Construct a family member from textual arguments (``platonic`` takes a name)."""
    if name == "platonic":
        _need(len(args) == 1, "platonic takes one solid name")
        return platonic(str(args[0]))
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; choose from platonic, {', '.join(FAMILIES)}")
    fn, arity = FAMILIES[name]
    if arity >= 0:
        _need(len(args) == arity, f"{name} takes {arity} integer argument(s), got {len(args)}")
    else:
        _need(len(args) >= 1, f"{name} takes one or more integer arguments")
    try:
        ints = [int(a) for a in args]
    except ValueError:
        raise ValueError(f"{name} arguments must be integers, got {list(args)}") from None
    return fn(*ints)
