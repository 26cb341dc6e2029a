"""Acceptance criteria 1-10, one test each.

Every test prints (and registers for the terminal summary) a single
``criterion N: PASS|FAIL`` line with its runtime against the budget.
Set ``PLANARCAGES_LONG=1`` to extend criterion 2 to the dodecahedron.
"""

from __future__ import annotations

import itertools
import os
import random
import time

import pytest

from planarcages import bounds as B
from planarcages import families as F
from planarcages import search as S
from planarcages.bounds import CageParams
from planarcages.canon import canonical_form
from planarcages.cli import main
from planarcages.graph import complete_bipartite, degree_profile, girth, is_connected
from planarcages.planarity import is_outerplanar, is_planar, test_planarity
from planarcages.search import allowed_x, enumerate_graphs, min_order, parity_prune, verify_uniqueness
from planarcages.structure import (
    LemmaViolation,
    Trichotomy,
    decompose_link,
    degree_trichotomy,
    is_block_graph,
    is_forest,
    link,
    outerplanar_degree2_pair,
)
from planarcages.verify import certify, reproduce_tables

from .conftest import ACCEPTANCE
from .oracles import atlas, brute_cages, nx_iso_classes_equal, outerplanar_graphs_upto, perm_isomorphic

Bi = CageParams.biregular
Reg = CageParams.regular


class Checks:
    def __init__(self) -> None:
        self.failures: list[str] = []
        self.count = 0

    def __call__(self, ok: bool, what: str) -> None:
        self.count += 1
        if not ok:
            self.failures.append(what)


def report(num: int, title: str, checks: Checks, started: float, budget: float, refuted: Checks | None = None) -> None:
    """Record the criterion line.

    ``refuted`` holds literal claims that the exhaustive checks show to be
    false; if any of them failed (and everything else passed) the criterion
    is reported as FAIL and the test ends as an expected failure.
    """
    elapsed = time.perf_counter() - started
    refuted_failures = refuted.failures if refuted else []
    ok = not checks.failures and not refuted_failures and elapsed < budget
    count = checks.count + (refuted.count if refuted else 0)
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {title} ({count} checks, {elapsed:.1f}s, budget {budget:.0f}s)"
    if checks.failures:
        line += " failed: " + "; ".join(checks.failures[:5])
    if refuted_failures:
        line += f" literal claim refuted ({len(refuted_failures)} counterexamples, e.g. {refuted_failures[0]}); corrected claim holds"
    ACCEPTANCE[num] = line
    print(line)
    assert not checks.failures, checks.failures
    assert elapsed < budget
    if refuted_failures:
        pytest.xfail(line)


def canon_set(graphs) -> list[str]:
    return sorted({canonical_form(g).decode() for g in graphs})


def cycle_partitions(m: int, least: int = 3):
    """Partitions of m into parts >= 3, parts non-decreasing."""
    if m == 0:
        yield ()
        return
    for first in range(least, m + 1):
        for rest in cycle_partitions(m - first, first):
            yield (first,) + rest


def test_criterion_1_platonic():
    t0 = time.perf_counter()
    ok = Checks()
    for name, k, gi, n in [("tetrahedron", 3, 3, 4), ("cube", 3, 4, 8), ("dodecahedron", 3, 5, 20), ("octahedron", 4, 3, 6), ("icosahedron", 5, 3, 12)]:
        g = F.platonic(name)
        ok(g.n == n and set(g.degrees()) == {k}, f"{name} order/degree")
        ok(girth(g) == gi, f"{name} girth")
        ok(is_planar(g), f"{name} planar")
        ok(B.regular_cage_order(k, gi) == n, f"regular_cage_order({k},{gi})")
    report(1, "Platonic solids", ok, t0, 1)


def test_criterion_2_regular_minimality():
    t0 = time.perf_counter()
    ok = Checks()
    cube = canonical_form(F.platonic("cube")).decode()
    for n in (4, 6):
        # with and without the edge-count bound: the engine alone must find nothing
        ok(enumerate_graphs(Reg(3, 4), n).graphs == [], f"cubic girth 4 n={n}")
        ok(enumerate_graphs(Reg(3, 4), n, edge_bound=False).graphs == [], f"cubic girth 4 n={n} (engine only)")
    ok(enumerate_graphs(Reg(3, 4), 8).graphs == [cube], "cube unique at n=8")
    ok(enumerate_graphs(Reg(3, 4), 8, edge_bound=False).graphs == [cube], "cube unique at n=8 (engine only)")
    ok(min_order(Reg(3, 4), 10).graphs == [cube], "min_order cubic girth 4")
    top = 20 if os.environ.get("PLANARCAGES_LONG") else 14
    for n in range(4, top + 1, 2):
        want = [canonical_form(F.platonic("dodecahedron")).decode()] if n == 20 else []
        ok(enumerate_graphs(Reg(3, 5), n).graphs == want, f"cubic girth 5 n={n}")
        ok(enumerate_graphs(Reg(3, 5), n, edge_bound=False).graphs == want, f"cubic girth 5 n={n} (engine only)")
    report(2, f"3-regular minimality (girth 5 up to n={top})", ok, t0, 600)


def test_criterion_3_girth3_search():
    t0 = time.perf_counter()
    ok = Checks()
    for params, n in [(Bi(5, 6, 3), 13), (Bi(5, 7, 3), 14)]:
        eng = S._Engine(params, n, allowed_x(params, n))
        ok(eng.triangulation, f"{params} n={n} triangulation forcing engaged")
        out = enumerate_graphs(params, n)
        ok(out.graphs == [] and out.exhaustive, f"{params} n={n} empty")
    ok(parity_prune(5, 7, 3, 15) is False, "parity prunes ({5,7};3) n=15")
    ok(enumerate_graphs(Bi(5, 7, 3), 15).skipped_orders == [15], "n=15 skipped")
    ok(certify(F.family_I(6), Bi(5, 6, 3)).status == "meets_exact_cage_order" and F.family_I(6).n == 14, "I_6 at 14")
    ok(certify(F.family_I(7), Bi(5, 7, 3)).status == "meets_exact_cage_order" and F.family_I(7).n == 16, "I_7 at 16")
    # the smallest graphs exist exactly where the certificates say
    ok(enumerate_graphs(Bi(5, 6, 3), 14).graphs == canon_set([F.family_I(6)]), "({5,6};3) n=14 is I_6")
    report(3, "({5,6};3) and ({5,7};3) searches", ok, t0, 3600)


def test_criterion_4_girth3_tables():
    t0 = time.perf_counter()
    ok = Checks()
    for m in range(3, 11):
        out = min_order(Bi(2, m, 3), m + 3)
        ok(out.order == m + 1, f"n_p({{2,{m}}};3)")
        expected = [F.pinwheel(m - 1)] + ([F.windmill(m // 2)] if m % 2 == 0 else [])
        ok(verify_uniqueness(Bi(2, m, 3), expected), f"({{2,{m}}};3) cage list")
        ok(out.graphs == canon_set(expected), f"({{2,{m}}};3) min_order list")
    literal = Checks()
    for m in range(4, 11):
        out = min_order(Bi(3, m, 3), m + 3)
        ok(out.order == m + 1, f"n_p({{3,{m}}};3)")
        others = ([F.double_windmill(m)] if m % 2 else []) + ([F.biwheel(3)] if m == 4 else [])
        # the listed cages: the wheel, M_m for odd m, and the biwheel for m = 4
        literal(verify_uniqueness(Bi(3, m, 3), [F.wheel(m)] + others), f"({{3,{m}}};3) listed cages")
        # removing the hub of a one-hub cage leaves a 2-regular graph: any union of cycles
        corrected = [F.multiwheel(*p) for p in cycle_partitions(m)] + others
        ok(verify_uniqueness(Bi(3, m, 3), corrected), f"({{3,{m}}};3) cages with multiwheels")
        if m + 1 <= 7:
            ok(nx_iso_classes_equal(out.decoded(), brute_cages({3, m}, 3, m + 1)), f"({{3,{m}}};3) against brute force")
    for m in range(5, 11):
        ok(min_order(Bi(4, m, 3), m + 3).order == m + 2, f"n_p({{4,{m}}};3)")
    report(4, "girth-3 orders and cage lists, m <= 10", ok, t0, 1800, literal)


def test_criterion_5_girth4():
    t0 = time.perf_counter()
    ok = Checks()
    for m in range(3, 9):
        out = min_order(Bi(2, m, 4), m + 4)
        ok(out.order == m + 2, f"n_p({{2,{m}}};4)")
        ok(out.graphs == canon_set([complete_bipartite(2, m)]), f"({{2,{m}}};4) unique K_2,m")
    for m in (4, 5):
        ok(min_order(Bi(3, m, 4), 12).order == 2 * m + 2, f"n_p({{3,{m}}};4)")
    for m in range(4, 14):
        ok(certify(F.family_D(m), Bi(3, m, 4)).status == "meets_exact_cage_order", f"D_{m}")
    z = F.family_Z(3)
    ok(z.n == 29 == B.girth4_refined_lower(14), "Z_3 order 29")
    ok(certify(z, Bi(3, 14, 4)).status == "meets_exact_cage_order", "Z_3 certifies")
    report(5, "girth-4 orders and constructions", ok, t0, 1800)


def test_criterion_6_girth5_and_up():
    t0 = time.perf_counter()
    ok = Checks()
    for m in range(3, 9):
        for g in range(3, 11):
            ok(F.family_O(m, g).n == B.chartrand_2m_exact(m, g), f"O_{m},{g}")
            if m % 2 == 0 and g % 2 == 1:
                # F_{m,g} is a cage only for odd g; for even g it has one extra vertex
                ok(F.family_F_cycles(m, g).n == B.chartrand_2m_exact(m, g), f"F_{m},{g}")
    for m, g in [(3, 6), (4, 6), (3, 7), (4, 7)]:
        expected = [F.family_O(m, g)]
        if m % 2 == 0 and g % 2 == 1:
            expected.append(F.family_F_cycles(m, g))
        out = min_order(Bi(2, m, g), B.chartrand_2m_exact(m, g) + 2)
        ok(out.order == B.chartrand_2m_exact(m, g), f"n_p({{2,{m}}};{g})")
        ok(verify_uniqueness(Bi(2, m, g), expected), f"({{2,{m}}};{g}) cage list")
    for m in (4, 5):
        p = F.family_P(m)
        c = certify(p, Bi(3, m, 5))
        ok(not c.violated and 3 * m + 11 <= p.n <= 6 * m + 2, f"P_{m}")
        ok((c.lower, c.upper) == (3 * m + 11, 6 * m + 2), f"P_{m} bounds")
    report(6, "girth >= 5 orders, cage lists and P_m", ok, t0, 1800)


def test_criterion_7_tables():
    t0 = time.perf_counter()
    ok = Checks()
    rows = reproduce_tables(20, 12)
    ok(bool(rows), "rows produced")
    ok(sum(r.table == "lower" for r in rows) > 0, "lower-bound rows present")
    ok({3, 4, 5} <= {r.g for r in rows if r.table != "lower"} and any(r.g >= 6 for r in rows), "all girth tables present")
    report(7, f"bound tables ({len(rows)} rows, zero mismatches)", ok, t0, 1)


def family_instances():
    yield from (F.platonic(name) for name in ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"))
    for l in range(2, 11):
        yield F.windmill(l)
        yield F.pinwheel(l)
    for m in range(3, 13):
        yield F.wheel(m)
        yield F.biwheel(m)
        yield F.k2m(m)
        if m % 2 and m >= 5:
            yield F.double_windmill(m)
    for m in range(6, 11):
        yield F.family_I(m)
    for m in range(4, 13):
        yield F.family_D(m)
    for k in range(3, 6):
        yield F.family_Z(k)
    for m in range(15, 26):
        yield F.family_Z_general(m)
    for m in range(4, 9):
        yield F.family_P(m)
    for m in range(3, 9):
        for g in range(3, 11):
            yield F.family_O(m, g)
            if m % 2 == 0:
                yield F.family_F_cycles(m, g)
    for parts in [(3, 3), (3, 4), (3, 3, 3), (4, 5)]:
        yield F.multiwheel(*parts)
    yield F.gadget_F()
    yield F.gadget_E4()


def test_criterion_8_technical_lemmas():
    t0 = time.perf_counter()
    ok = Checks()
    literal = Checks()
    # links are outerplanar; the intersection graph is a forest as long as no
    # link vertex lies in three pieces, and a block graph in general
    for g in family_instances():
        emb = test_planarity(g)
        for x in range(g.n):
            lnk = link(g, emb, x)
            ok(is_outerplanar(lnk), f"link outerplanar n={g.n} x={x}")
            d = decompose_link(lnk)
            literal(is_forest(d.intersection), f"intersection graph of {sorted(degree_profile(g).items())} girth {girth(g)} at x={x}")
            ok(is_block_graph(d.intersection), f"intersection block graph n={g.n} x={x}")
            if d.max_pieces_at_vertex <= 2:
                ok(is_forest(d.intersection), f"intersection forest n={g.n} x={x}")
            ok(d.max_shared <= 1, f"pieces share at most one vertex n={g.n} x={x}")
            if min(g.degrees()) == 3 and girth(g) == 4 and g.degree(x) == max(g.degrees()):
                ok(g.n >= B.link_lower_bound(g.degree(x), d.k, d.c, d.ends), f"link lower bound n={g.n}")
    # degree-2 pairs in outerplanar graphs, exhaustive for n <= 9
    outer = outerplanar_graphs_upto(9)
    tested = 0
    for n in range(4, 10):
        for g in outer[n]:
            if min(g.degrees()) >= 2:
                tested += 1
                try:
                    u, v = outerplanar_degree2_pair(g)
                    ok(g.degree(u) == 2 == g.degree(v) and not g.has_edge(u, v), f"degree-2 pair {g.edges}")
                except LemmaViolation:
                    ok(False, f"degree-2 pair missing {g.edges}")
    ok(tested > 0, "outerplanar sample non-empty")
    # trichotomy: exhaustive over order m+1 <= 8; a degree-m vertex dominates
    for n in range(4, 9):
        m = n - 1
        if n <= 7:
            pool = [g for g in atlas(n) if max(g.degrees()) == m]
        else:
            pool = [h.add_vertex(range(h.n)) for h in atlas(7)]
        for g in pool:
            if not is_planar(g):
                continue
            count = sum(1 for d in g.degrees() if d == m)
            try:
                t = degree_trichotomy(g, m)
                ok(t is Trichotomy.AT_MOST_TWO or m in (3, 4), f"trichotomy m={m}")
                ok(count <= 2 or m in (3, 4), f"count {count} m={m}")
            except LemmaViolation:
                ok(False, f"trichotomy violated {g.edges}")
    report(8, "link, degree-2 pair and trichotomy lemmas", ok, t0, 1200, literal)


def test_criterion_9_oracle_equivalence():
    t0 = time.perf_counter()
    ok = Checks()
    for n in range(3, 8):
        for g in range(3, n + 1):
            queries = [Reg(k, g) for k in range(2, n)]
            queries += [Bi(r, m, g) for r in range(2, n) for m in range(r + 1, n) if B.biregular_feasible(r, m, g)]
            for q in queries:
                got = enumerate_graphs(q, n).decoded()
                ok(nx_iso_classes_equal(got, brute_cages(set(q.degrees), g, n)), f"{q} n={n}")
    rng = random.Random(2024)
    for n in range(1, 8):
        classes = atlas(n)
        forms = [canonical_form(g) for g in classes]
        # one graph per class, so distinct classes must get distinct forms
        ok(len(set(forms)) == len(forms), f"distinct forms n={n}")
        for g, f in zip(classes, forms):
            perm = list(range(n))
            rng.shuffle(perm)
            h = g.relabel(perm)
            ok(canonical_form(h) == f, f"relabel invariance n={n}")
            if n <= 5:
                ok(perm_isomorphic(g, h), f"perm oracle n={n}")
        # pairs the cheap invariants cannot separate go through the brute-force oracle
        if n <= 6:
            for a, b in itertools.combinations(range(len(classes)), 2):
                ga, gb = classes[a], classes[b]
                if sorted(ga.degrees()) == sorted(gb.degrees()):
                    ok(perm_isomorphic(ga, gb) == (forms[a] == forms[b]), f"pair n={n}")
    report(9, "search and canonical form against oracles", ok, t0, 600)


CLI_QUERIES = [
    ["5", "6", "3", "--n", "13"],
    ["5", "7", "3", "--n", "14"],
    ["5", "6", "3", "--n", "14"],
    ["2", "10", "3", "--max-n", "12"],
    ["3", "9", "3", "--max-n", "12"],
    ["4", "10", "3", "--max-n", "13"],
    ["2", "8", "4", "--max-n", "11"],
    ["3", "5", "4", "--max-n", "12"],
]


def test_criterion_10_determinism(capsys):
    t0 = time.perf_counter()
    ok = Checks()
    for q in CLI_QUERIES:
        outs = []
        for threads in ("1", "2", "8"):
            code = main(["search", *q, "--threads", threads])
            out, _ = capsys.readouterr()
            ok(code == 0, f"exit code {q}")
            outs.append(out)
        ok(outs[0] == outs[1] == outs[2], f"byte-identical {q}")
    with capsys.disabled():
        report(10, "search output identical for 1, 2 and 8 workers", ok, t0, 3600)


@pytest.mark.skipif(not os.environ.get("PLANARCAGES_LONG"), reason="long run")
def test_dodecahedron_is_found_by_search():
    out = enumerate_graphs(Reg(3, 5), 20, edge_bound=False)
    assert out.graphs == [canonical_form(F.platonic("dodecahedron")).decode()]
    assert is_connected(out.decoded()[0])
