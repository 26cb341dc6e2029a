"""Closed-form bounds on (planar) cage orders.

Everything here is exact integer arithmetic; rational bounds are rounded
up because orders are integers.  ``known_bounds_table`` encodes the
per-girth summary of what is known for biregular planar cages, with the
source of every number attached as provenance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


class InfeasibleTriplet(ValueError):
    """No planar graph exists with the requested degrees and girth."""


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class CageParams:
    """Either a regular pair (k, g) or a biregular triplet ({r, m}; g)."""

    g: int
    k: Optional[int] = None
    r: Optional[int] = None
    m: Optional[int] = None

    def __post_init__(self) -> None:
        if self.k is not None:
            if self.r is not None or self.m is not None:
                raise ValueError("give either k or (r, m), not both")
            if self.k < 2 or self.g < 3:
                raise ValueError(f"regular parameters need k >= 2 and g >= 3, got k={self.k}, g={self.g}")
        else:
            if self.r is None or self.m is None:
                raise ValueError("biregular parameters need r and m")
            if not (2 <= self.r < self.m) or self.g < 3:
                raise ValueError(f"biregular parameters need 2 <= r < m and g >= 3, got ({self.r}, {self.m}, {self.g})")

    @classmethod
    def regular(cls, k: int, g: int) -> CageParams:
        return cls(g=g, k=k)

    @classmethod
    def biregular(cls, r: int, m: int, g: int) -> CageParams:
        return cls(g=g, r=r, m=m)

    @property
    def is_regular(self) -> bool:
        return self.k is not None

    @property
    def degrees(self) -> tuple[int, ...]:
        if self.k is not None:
            return (self.k,)
        assert self.r is not None and self.m is not None
        return (self.r, self.m)

    def __str__(self) -> str:
        if self.k is not None:
            return f"({self.k},{self.g})"
        return f"({{{self.r},{self.m}}};{self.g})"


@dataclass
class BoundReport:
    feasible: bool
    lower: Optional[int] = None
    upper: Optional[int] = None
    exact: bool = False
    provenance: list[tuple[str, int, str]] = field(default_factory=list)
    graphs: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.lower is not None and self.upper is not None:
            assert self.lower <= self.upper, f"crossing bounds {self.lower} > {self.upper}"
        if self.exact:
            assert self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None


# --- general cage bounds ---------------------------------------------------


def _check_biregular(r: int, m: int, g: int) -> None:
    if not (2 <= r < m) or g < 3:
        raise ValueError(f"need 2 <= r < m and g >= 3, got r={r}, m={m}, g={g}")


def moore_biregular(r: int, m: int, g: int) -> int:
    """Tree-counting lower bound for ({r,m};g)-cages, sums indexed from 0."""
    _check_biregular(r, m, g)
    t, odd = divmod(g, 2)
    if odd:
        return 1 + sum(m * (r - 1) ** i for i in range(t))
    return 1 + sum(m * (r - 1) ** i for i in range(t - 1)) + (r - 1) ** (t - 1)


def chartrand_2m_exact(m: int, g: int) -> int:
    """Exact order of the ({2,m};g)-cage (no planarity requirement)."""
    if m <= 2 or g < 3:
        raise ValueError(f"need m > 2 and g >= 3, got m={m}, g={g}")
    if g % 2 == 0:
        num = m * (g - 2) + 4
    else:
        num = m * (g - 1) + 2
    assert num % 2 == 0
    return num // 2


def chartrand_girth4(r: int, m: int) -> int:
    if not r < m:
        raise ValueError("need r < m")
    return r + m


# --- regular planar cages --------------------------------------------------


def regular_feasible(k: int, g: int) -> bool:
    if k == 2:
        return g >= 3
    return 3 <= k <= 5 and 3 <= g <= 5 and 2 * k - g * (k - 2) > 0


def regular_cage_order(k: int, g: int) -> int:
    """Order of the planar (k,g)-cage: cycles for k=2, Platonic solids otherwise."""
    if not regular_feasible(k, g):
        raise InfeasibleTriplet(f"no planar ({k},{g})-graph exists")
    if k == 2:
        return g
    den = 2 * k - g * (k - 2)
    assert 4 * g % den == 0
    return 4 * g // den


# --- biregular feasibility and lower bounds --------------------------------

FEASIBLE_SETS = (
    "{({r,m},3) | 2<=r<=5, r<m}",
    "{({r,m},4) | 2<=r<=3, r<m}",
    "{({r,m},5) | 2<=r<=3, r<m}",
    "{({2,m},g) | 2<m, 6<=g}",
)


def biregular_feasible(r: int, m: int, g: int) -> bool:
    """Whether a planar ({r,m};g)-graph can exist: r(g-2) < 2g, i.e. r < 2 + 4/(g-2)."""
    _check_biregular(r, m, g)
    return r * (g - 2) < 2 * g


def violated_set(r: int, m: int, g: int) -> str:
    """Name of the feasibility set whose girth matches (used in error messages)."""
    if g == 3:
        return FEASIBLE_SETS[0]
    if g in (4, 5):
        return FEASIBLE_SETS[g - 3]
    return FEASIBLE_SETS[3]


def inequality_eq3(y: int, x: int, r: int, m: int, g: int) -> bool:
    """Face-counting inequality for y vertices of degree r and x of degree m."""
    return y * (r * (2 - g) + 2 * g) + x * (m * (2 - g) + 2 * g) - 4 * g >= 0


def general_lower_bound(r: int, m: int, g: int) -> int:
    if not biregular_feasible(r, m, g):
        raise InfeasibleTriplet(f"({{{r},{m}}};{g}) is not planar-feasible")
    den = r * (2 - g) + 2 * g
    return 1 + _ceil_div(m * (g - 2) + 2 * g, den)


def girth4_refined_lower(m: int) -> int:
    if m < 4:
        raise ValueError("needs m >= 4")
    if m <= 13:
        return 2 * m + 2
    return _ceil_div(9 * m + 19, 5)


def link_lower_bound(m: int, k: int, c: int, ends: int) -> int:
    if min(m, k, c, ends) < 0:
        raise ValueError("arguments must be non-negative")
    return 2 * m - k + c + ends + 1


LOWER_BOUND_ROWS = {
    (2, 3): "a",
    (3, 3): "b",
    (4, 3): "c",
    (5, 3): "d",
    (2, 4): "e",
    (3, 4): "f",
    (2, 5): "g",
    (3, 5): "h",
}


def lower_bound_row(r: int, g: int) -> str:
    if (r, g) in LOWER_BOUND_ROWS:
        return LOWER_BOUND_ROWS[(r, g)]
    if r == 2 and g >= 6:
        return "i" if g % 2 == 0 else "j"
    raise InfeasibleTriplet(f"no lower-bound row for r={r}, g={g}")


def planar_lower_bound(r: int, m: int, g: int, *, refined: bool = False) -> BoundReport:
    """Best elementary lower bound on n_p({r,m};g).

    With ``refined=False`` this is exactly the lower-bound table (max of the
    tree bound, the face-counting bound and the exact ({2,m};g) and girth-4
    cage orders).  ``refined=True`` also folds in the link-based girth-4
    bound for r = 3.
    """
    if not biregular_feasible(r, m, g):
        raise InfeasibleTriplet(f"({{{r},{m}}};{g}) is not planar-feasible; allowed: {violated_set(r, m, g)}")
    prov = [
        ("moore_biregular", moore_biregular(r, m, g), "tree counting"),
        ("general_lower_bound", general_lower_bound(r, m, g), "face counting"),
    ]
    if r == 2:
        prov.append(("chartrand_2m_exact", chartrand_2m_exact(m, g), "({2,m};g)-cage order"))
    if g == 4:
        prov.append(("chartrand_girth4", chartrand_girth4(r, m), "({r,m};4)-cage order"))
    lower = max(v for _, v, _ in prov)
    prov.append((f"row ({lower_bound_row(r, g)})", lower, "lower-bound table"))
    if refined and r == 3 and g == 4:
        ref = girth4_refined_lower(m)
        prov.append(("girth4_refined_lower", ref, "link argument"))
        lower = max(lower, ref)
    return BoundReport(feasible=True, lower=lower, provenance=prov)


# --- upper bounds from constructions and the per-girth summary --------------


def o_order(m: int, g: int) -> int:
    return (m - 1) * _ceil_div(g - 2, 2) + (g - 2) // 2 + 2


def f_cycles_order(m: int, g: int) -> int:
    return (m // 2) * (g - 1) + 1


def z_general_order(m: int) -> int:
    return m + 4 * _ceil_div(m + 1, 5) + 3


def b_upper(m: int) -> int:
    """Order of the girth-5 ({3,m}) construction B_m (m >= 6); only the count is available."""
    if m < 6:
        raise ValueError("B_m needs m >= 6")
    if m % 2 == 0:
        return 3 * m + 2 * ((m - 6) // 4) + 21
    return 3 * m + 2 * ((m - 5) // 4) + 22


def a_upper(m: int) -> int:
    """Order of the girth-3 ({5,m}) construction A_m (m >= 13); only the count is available."""
    if m < 13:
        raise ValueError("A_m needs m >= 13")
    return m + 15


def known_bounds_table(r: int, m: int, g: int) -> BoundReport:
    """Lower/upper bounds and exactness for n_p({r,m};g) as established by the
    constructions and arguments for each girth."""
    if not biregular_feasible(r, m, g):
        raise InfeasibleTriplet(f"({{{r},{m}}};{g}) is not planar-feasible; allowed: {violated_set(r, m, g)}")
    base = planar_lower_bound(r, m, g, refined=True)
    prov = list(base.provenance)
    lower = base.lower
    uppers: list[tuple[str, int, str]] = []
    graphs: list[str] = []
    exact_claim = False

    if g == 3:
        if r == 2:
            uppers.append(("pinwheel", m + 1, "construction"))
            graphs.append(f"pinwheel({m - 1})")
            if m % 2 == 0:
                graphs.append(f"windmill({m // 2})")
            exact_claim = True
        elif r == 3:
            uppers.append(("wheel", m + 1, "construction"))
            graphs.append(f"wheel({m})")
            if m % 2 == 1:
                graphs.append(f"double_windmill({m})")
            if m == 4:
                graphs.append("biwheel(3)")
            if m >= 6:
                # the hub may also see several disjoint rims
                graphs.append(f"multiwheel(3,{m - 3})")
            exact_claim = True
        elif r == 4:
            uppers.append(("biwheel", m + 2, "construction"))
            graphs.append(f"biwheel({m})")
            lower = max(lower, m + 2)
            prov.append(("K5-minor / outerplanar argument", m + 2, "construction"))
            exact_claim = True
        else:  # r == 5
            if m >= 6:
                uppers.append(("I", 2 * m + 2, "I_m construction"))
                graphs.append(f"I({m})")
            if m >= 13:
                uppers.append(("A (order formula only)", a_upper(m), "A_m construction"))
                graphs.append(f"A({m})")
            if m in (6, 7):
                lower = max(lower, 2 * m + 2)
                prov.append(("exhaustive search", 2 * m + 2, "exhaustive search"))
                exact_claim = True
    elif g == 4:
        if r == 2:
            uppers.append(("K2m", m + 2, "construction"))
            graphs.append(f"K2m({m})")
            exact_claim = True
        else:  # r == 3
            if 4 <= m <= 13:
                uppers.append(("D", 2 * m + 2, "construction"))
                graphs.append(f"D({m})")
                exact_claim = True
            if m >= 14:
                if m % 5 == 4:
                    uppers.append(("Z", (9 * m + 19) // 5, "construction"))
                    graphs.append(f"Z({(m + 1) // 5})")
                    exact_claim = True
                if m > 14:
                    uppers.append(("Z_general", z_general_order(m), "construction"))
                    graphs.append(f"Z_general({m})")
                uppers.append(("D", 2 * m + 2, "D_m construction"))
    elif g == 5:
        if r == 2:
            uppers.append(("O", o_order(m, 5), "construction"))
            graphs.append(f"O({m},5)")
            if m % 2 == 0:
                graphs.append(f"F_cycles({m},5)")
            exact_claim = True
        else:  # r == 3
            if m >= 4:
                uppers.append(("P", 6 * m + 2, "construction"))
                graphs.append(f"P({m})")
            if m >= 6:
                uppers.append(("B (order formula only)", b_upper(m), "construction"))
                graphs.append(f"B({m})")
    else:  # r == 2, g >= 6
        uppers.append(("O", o_order(m, g), "construction"))
        graphs.append(f"O({m},{g})")
        if g % 2 == 1 and m % 2 == 0:
            graphs.append(f"F_cycles({m},{g})")
        exact_claim = True

    upper = min((v for _, v, _ in uppers), default=None)
    prov.extend(uppers)
    exact = exact_claim and upper is not None and lower == upper
    if exact_claim and not exact:
        raise AssertionError(f"claimed exact value for ({r},{m},{g}) but bounds are {lower}..{upper}")
    return BoundReport(feasible=True, lower=lower, upper=upper, exact=exact, provenance=prov, graphs=graphs)


def parity_prune(r: int, m: int, g: int, n: int) -> bool:
    """Whether some split of n vertices into x of degree m and y of degree r
    (both positive) has an even degree sum and satisfies the face bound."""
    return bool(feasible_splits(r, m, g, n))


def feasible_splits(r: int, m: int, g: int, n: int) -> list[tuple[int, int]]:
    """All (x, y) with x + y = n, x, y >= 1, even degree sum and e(g-2) <= g(n-2)."""
    out = []
    for x in range(1, n):
        y = n - x
        total = y * r + x * m
        if total % 2:
            continue
        e = total // 2
        if not inequality_eq3(y, x, r, m, g):
            continue
        if n >= 3 and e * (g - 2) > g * (n - 2):
            continue
        out.append((x, y))
    return out
