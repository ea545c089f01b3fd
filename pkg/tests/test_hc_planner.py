import pytest

from trigrid.corpus import locally_connected_corpus
from trigrid.ear_planner import PlanError
from trigrid.grid import build_graph, star_of_david_points
from trigrid.hamilton import find_hamilton, find_local_structure
from trigrid.hc_planner import (_dominoes, _label_order, align_with_hamilton,
                                plan_hamilton, swap_adjacent)
from trigrid.placement import (Placement, RotationSpec, rotate,
                               verify_sequence)

from conftest import random_placement


def test_align_with_hamilton(rng):
    for g in locally_connected_corpus()[:4]:
        h = find_hamilton(g)
        for _ in range(5):
            p = random_placement(g, rng)
            seq = align_with_hamilton(p, h)
            assert seq.start.pieces == p.pieces
            assert all(e in h.edges for e in seq.end.pieces)


def _aligned_at_c(g, rng):
    h = find_hamilton(g)
    pd = find_local_structure(g, h)
    p = random_placement(g, rng)
    seq = align_with_hamilton(p, pd.cycle)
    seq = seq.then(rotate(seq.end, RotationSpec(pd.cycle.order,
                                                target_exposed=pd.c)))
    return pd, seq.end


def test_swap_adjacent_is_transposition(hex7, rng):
    pd, cur = _aligned_at_c(hex7, rng)
    dominoes = _dominoes(pd, cur)
    for j in range(len(dominoes)):
        before = _label_order(cur, dominoes)
        step = swap_adjacent(cur, j, pd)
        after = _label_order(step.end, dominoes)
        k = (j + 1) % len(dominoes)
        want = list(before)
        want[j], want[k] = want[k], want[j]
        assert after == want
        assert step.end.exposed == pd.c
        rep = verify_sequence(step)
        assert rep.ok


def test_plan_hamilton_identity(hex7, rng):
    p = random_placement(hex7, rng)
    rep = plan_hamilton(hex7, p, p)
    assert rep.sequence.end.pieces == p.pieces
    assert rep.sequence.end.exposed == p.exposed


def test_plan_hamilton_pentagon_pairs(pentagon, rng):
    for _ in range(10):
        p = random_placement(pentagon, rng)
        q = random_placement(pentagon, rng)
        rep = plan_hamilton(pentagon, p, q)
        assert rep.strategy == "hamilton"
        assert rep.slide_count == len(rep.sequence.moves)
        check = verify_sequence(rep.sequence, expected_end=q)
        assert check.ok and check.matches_expected


def test_plan_hamilton_corpus_sample(rng):
    for g in locally_connected_corpus()[:5]:
        for _ in range(3):
            p = random_placement(g, rng)
            q = random_placement(g, rng)
            rep = plan_hamilton(g, p, q)
            check = verify_sequence(rep.sequence, expected_end=q)
            assert check.ok and check.matches_expected


def test_plan_hamilton_refuses_star_of_david():
    from trigrid.matching import enumerate_near_perfect_matchings
    g = build_graph(star_of_david_points())
    m = enumerate_near_perfect_matchings(g)[0]
    p = Placement.make(g, sorted(m.edges))
    with pytest.raises(PlanError):
        plan_hamilton(g, p, p)
