from __future__ import annotations

import pytest

from planarcages import bounds as B
from planarcages import families as F
from planarcages.graph import degree_profile, girth, is_connected
from planarcages.planarity import is_planar


def check(g, n, profile, gi):
    assert g.n == n
    assert degree_profile(g) == profile
    assert girth(g) == gi
    assert is_planar(g) and is_connected(g)


@pytest.mark.parametrize(
    "name,k,gi,n",
    [("tetrahedron", 3, 3, 4), ("cube", 3, 4, 8), ("octahedron", 4, 3, 6), ("dodecahedron", 3, 5, 20), ("icosahedron", 5, 3, 12)],
)
def test_platonic(name, k, gi, n):
    check(F.platonic(name), n, {k: n}, gi)
    assert B.regular_cage_order(k, gi) == n


def test_platonic_unknown():
    with pytest.raises(ValueError):
        F.platonic("tesseract")


@pytest.mark.parametrize("l", range(2, 11))
def test_windmill(l):
    check(F.windmill(l), 2 * l + 1, {2: 2 * l, 2 * l: 1}, 3)


@pytest.mark.parametrize("a", range(2, 11))
def test_pinwheel(a):
    check(F.pinwheel(a), a + 2, {2: a, a + 1: 2}, 3)


@pytest.mark.parametrize("m", range(3, 13))
def test_wheel_and_biwheel(m):
    check(F.wheel(m), m + 1, {3: m, m: 1} if m != 3 else {3: 4}, 3)
    prof = {4: m, m: 2} if m != 4 else {4: 6}
    if m == 3:
        prof = {3: 2, 4: 3}
    check(F.biwheel(m), m + 2, prof, 3)
    g = F.biwheel(m)
    assert not g.has_edge(0, 1)


@pytest.mark.parametrize("m", [5, 7, 9, 11])
def test_double_windmill(m):
    check(F.double_windmill(m), m + 1, {3: m - 1, m: 2}, 3)


def test_small_parameters_rejected():
    for fn, bad in [(F.windmill, 1), (F.pinwheel, 1), (F.wheel, 2), (F.biwheel, 2), (F.double_windmill, 6), (F.family_I, 5), (F.family_D, 3), (F.family_Z, 2), (F.family_Z_general, 14), (F.family_P, 3), (F.k2m, 2)]:
        with pytest.raises(ValueError):
            fn(bad)
    with pytest.raises(ValueError):
        F.family_F_cycles(5, 5)
    with pytest.raises(ValueError):
        F.family_O(2, 5)


@pytest.mark.parametrize("m", range(6, 11))
def test_family_I(m):
    check(F.family_I(m), 2 * m + 2, {5: 2 * m, m: 2}, 3)


def test_family_I_13_matches_A_order():
    assert F.family_I(13).n == 28 == B.a_upper(13)


@pytest.mark.parametrize("m", range(4, 13))
def test_family_D(m):
    check(F.family_D(m), 2 * m + 2, {3: 2 * m, m: 2}, 4)


def test_gadgets():
    fg, e4 = F.gadget_F(), F.gadget_E4()
    assert fg.n == 9 and degree_profile(fg) == {2: 5, 3: 4} and girth(fg) == 4
    assert e4.n == 8 and degree_profile(e4) == {2: 6, 3: 2}
    # the chord splits the octagon into two pentagons
    assert girth(e4) == 5


@pytest.mark.parametrize("k", range(3, 6))
def test_family_Z(k):
    check(F.family_Z(k), 9 * k + 2, {3: 9 * k + 1, 5 * k - 1: 1}, 4)


@pytest.mark.parametrize("m", range(15, 26))
def test_family_Z_general(m):
    n = m + 4 * -(-(m + 1) // 5) + 3
    check(F.family_Z_general(m), n, {3: n - 1, m: 1}, 4)
    assert n == B.z_general_order(m)


@pytest.mark.parametrize("m", range(4, 9))
def test_family_P(m):
    check(F.family_P(m), 6 * m + 2, {3: 6 * m, m: 2}, 5)


@pytest.mark.parametrize("m", range(3, 9))
@pytest.mark.parametrize("g", range(3, 11))
def test_family_O_and_F_cycles(m, g):
    o = F.family_O(m, g)
    n = B.chartrand_2m_exact(m, g)
    check(o, n, {2: n - 2, m: 2}, g)
    if m % 2 == 0 and m >= 4:
        fc = F.family_F_cycles(m, g)
        assert fc.n == (m // 2) * (g - 1) + 1
        check(fc, fc.n, {2: fc.n - 1, m: 1}, g)
        if g % 2 == 1:
            assert fc.n == n


@pytest.mark.parametrize("m", range(3, 13))
def test_k2m(m):
    check(F.k2m(m), m + 2, {2: m, m: 2}, 4)


def test_build_registry():
    assert F.build("platonic", ["cube"]).n == 8
    assert F.build("O", ["4", "6"]).n == 10
    with pytest.raises(ValueError):
        F.build("O", ["4"])
    with pytest.raises(ValueError):
        F.build("nope", [])
    with pytest.raises(ValueError):
        F.build("D", ["x"])


@pytest.mark.parametrize("parts", [(3, 3), (3, 4), (4, 4), (3, 3, 3), (3, 7)])
def test_multiwheel(parts):
    m = sum(parts)
    check(F.multiwheel(*parts), m + 1, {3: m, m: 1}, 3)


def test_multiwheel_single_rim_is_wheel():
    assert F.multiwheel(6) == F.wheel(6)
    assert F.build("multiwheel", ["3", "4"]) == F.multiwheel(3, 4)
    with pytest.raises(ValueError):
        F.multiwheel(2, 4)
    with pytest.raises(ValueError):
        F.build("multiwheel", [])
