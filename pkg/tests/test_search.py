from __future__ import annotations

import random

import pytest

from planarcages import families as F
from planarcages.bounds import CageParams, InfeasibleTriplet, biregular_feasible
from planarcages.canon import canonical_form
from planarcages.graph import complete_bipartite, decode_graph6, degree_profile, girth, is_connected
from planarcages.search import (
    SearchError,
    allowed_x,
    enumerate_graphs,
    min_order,
    parity_prune,
    verify_uniqueness,
)

from .oracles import brute_cages, cycle_girth, nx_iso_classes_equal, nx_planar

B = CageParams.biregular
R = CageParams.regular


def small_queries(n_max: int = 7):
    for n in range(3, n_max + 1):
        for g in range(3, n + 1):
            for k in range(2, n):
                yield R(k, g), n
            for r in range(2, n):
                for m in range(r + 1, n):
                    if biregular_feasible(r, m, g):
                        yield B(r, m, g), n


def oracle(params: CageParams, n: int, connected: bool = True):
    return brute_cages(set(params.degrees), params.g, n, connected)


@pytest.mark.parametrize(
    "params,n,count",
    [
        (B(2, 3, 3), 4, 1),
        (B(3, 5, 3), 6, 2),
        (B(2, 5, 4), 7, 1),
        (R(3, 4), 8, 1),
        (B(2, 6, 3), 7, 2),
        (B(4, 5, 3), 7, 1),
        (B(3, 4, 4), 10, 1),
        (B(2, 4, 7), 13, 2),
        (B(2, 4, 3), 5, 2),
    ],
)
def test_small_counts(params, n, count):
    out = enumerate_graphs(params, n)
    assert out.exhaustive and len(out.graphs) == count


def test_k2m_is_the_girth4_cage():
    out = enumerate_graphs(B(2, 6, 4), 8)
    assert out.graphs == [canonical_form(complete_bipartite(2, 6)).decode()]


def test_enumerate_matches_bruteforce_small():
    for params, n in small_queries(6):
        got = enumerate_graphs(params, n).decoded()
        assert nx_iso_classes_equal(got, oracle(params, n)), (params, n)


def test_outputs_are_isomorph_free_and_certified():
    for params, n in [(B(2, 6, 3), 7), (B(3, 5, 3), 6), (B(2, 4, 7), 13), (B(3, 4, 4), 10)]:
        out = enumerate_graphs(params, n)
        forms = [canonical_form(g) for g in out.decoded()]
        assert len(set(forms)) == len(forms)
        for g in out.decoded():
            assert set(degree_profile(g)) == set(params.degrees)
            assert girth(g) == params.g and nx_planar(g) and is_connected(g)


def test_random_leaf_audit():
    # re-check a sample of accepted graphs from scratch with the oracles
    rng = random.Random(7)
    pool = []
    for params, n in [(B(2, 8, 3), 9), (B(3, 6, 3), 7), (B(2, 5, 5), 11), (B(4, 7, 3), 9)]:
        pool += [(params, g) for g in enumerate_graphs(params, n).decoded()]
    for params, g in rng.sample(pool, min(8, len(pool))):
        assert cycle_girth(g) == params.g if g.n <= 11 else girth(g) == params.g
        assert nx_planar(g)


def test_parity_prune_examples():
    assert parity_prune(5, 7, 3, 15) is False
    assert parity_prune(5, 6, 3, 13) is True
    assert parity_prune(2, 3, 3, 3) is False
    assert allowed_x(B(5, 7, 3), 15) == []


def test_pruned_order_reports_empty():
    out = enumerate_graphs(B(5, 7, 3), 15)
    assert out.graphs == [] and out.exhaustive and out.skipped_orders == [15]


def test_infeasible_query_raises():
    with pytest.raises(InfeasibleTriplet):
        enumerate_graphs(B(4, 5, 4), 9)


def test_determinism_across_workers():
    base = enumerate_graphs(B(4, 6, 3), 8)
    for w in (2, 3):
        assert enumerate_graphs(B(4, 6, 3), 8, workers=w).graphs == base.graphs
    assert enumerate_graphs(B(4, 6, 3), 8, split_depth=1).graphs == base.graphs


def test_checkpoint_resume(tmp_path):
    ck = tmp_path / "ck.txt"
    first = enumerate_graphs(B(3, 4, 4), 10, checkpoint=str(ck))
    lines = ck.read_text().splitlines()
    assert lines[0].startswith("#") and len(lines) > 2
    # drop the second half and resume
    ck.write_text("\n".join(lines[: len(lines) // 2]) + "\n")
    second = enumerate_graphs(B(3, 4, 4), 10, checkpoint=str(ck))
    assert second.graphs == first.graphs
    assert len(ck.read_text().splitlines()) == len(lines)
    # fully complete checkpoint: nothing left to run
    third = enumerate_graphs(B(3, 4, 4), 10, checkpoint=str(ck))
    assert third.graphs == first.graphs


def test_checkpoint_rejects_other_query_and_corruption(tmp_path):
    ck = tmp_path / "ck.txt"
    enumerate_graphs(B(2, 5, 4), 7, checkpoint=str(ck))
    with pytest.raises(SearchError):
        enumerate_graphs(B(2, 6, 4), 8, checkpoint=str(ck))
    header = ck.read_text().splitlines()[0]
    ck.write_text(header + "\nnot a valid line\n")
    with pytest.raises(SearchError):
        enumerate_graphs(B(2, 5, 4), 7, checkpoint=str(ck))


def test_disconnected_audit():
    # two disjoint triangles are the only disconnected 2-regular graph of girth 3 on 6 vertices
    out = enumerate_graphs(R(2, 3), 6, connected=False)
    assert len(out.graphs) == 1
    assert nx_iso_classes_equal(out.decoded(), oracle(R(2, 3), 6, connected=False))
    for params, n in [(B(2, 3, 3), 7), (B(3, 4, 3), 7), (R(3, 3), 7)]:
        got = enumerate_graphs(params, n, connected=False).decoded()
        assert nx_iso_classes_equal(got, oracle(params, n, connected=False)), (params, n)


def test_disconnected_never_smaller_for_girth3_tables():
    # below the connected cage order there is no disconnected graph either
    for m in (4, 5, 6):
        for params, n in [(B(2, m, 3), m + 1), (B(3, m, 3), m + 1)]:
            for k in range(m + 1, n + 1):
                assert enumerate_graphs(params, k, connected=False).graphs == []


def test_min_order_examples():
    out = min_order(B(2, 6, 4), 12)
    assert out.order == 8 and len(out.graphs) == 1
    out = min_order(R(3, 4), 10)
    assert out.order == 8 and out.skipped_orders == [4, 5, 6, 7]
    assert min_order(B(3, 4, 4), 9).order is None


def test_edge_bound_switch():
    # without the face-counting bound the engine alone must rule orders out
    for n in (4, 6, 8, 10, 12):
        assert enumerate_graphs(R(3, 5), n, edge_bound=False).graphs == []
    assert allowed_x(R(3, 5), 12) == [] and allowed_x(R(3, 5), 12, edge_bound=False) == [12]


def test_verify_uniqueness_examples():
    assert verify_uniqueness(B(2, 6, 3), [F.pinwheel(5), F.windmill(3)])
    assert verify_uniqueness(B(2, 5, 3), [F.pinwheel(4)])
    assert not verify_uniqueness(B(2, 6, 3), [F.pinwheel(5)])
    assert verify_uniqueness(B(2, 4, 7), [F.family_O(4, 7), F.family_F_cycles(4, 7)])
    with pytest.raises(ValueError):
        verify_uniqueness(B(2, 5, 3), [])


def test_render_is_stable():
    out = enumerate_graphs(B(2, 6, 3), 7)
    text = out.render()
    assert "exhaustive" in text and "elapsed" not in text
    assert text.splitlines()[-2:] == out.graphs
    for s in out.graphs:
        decode_graph6(s)
