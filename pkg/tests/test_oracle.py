import io
import math

import pytest

from trigrid.grid import build_graph, chord_cycle_graph, diamond_cycle_graph
from trigrid.matching import enumerate_near_perfect_matchings
from trigrid.oracle import (OracleBudgetError, bfs_component, distance,
                            export_csv, is_reconfigurable_bruteforce,
                            state_count)
from trigrid.placement import Placement

from conftest import random_placement


def test_triangle_component():
    g = build_graph([(0, 0), (1, 0), (0, 1)])
    comp = bfs_component(g, Placement.make(g, [(1, 2)]))
    assert comp.size == 3
    assert comp.eccentricity == 1
    assert comp.size == state_count(g)


def test_pentagon_component_covers_everything(pentagon):
    p = Placement.make(pentagon, [(2, 3), (4, 5)])
    comp = bfs_component(pentagon, p)
    npm = len(enumerate_near_perfect_matchings(pentagon))
    assert comp.size == npm * math.factorial(2)
    assert comp.size == state_count(pentagon)
    assert comp.eccentricity <= 8
    assert is_reconfigurable_bruteforce(pentagon)


def test_distance_symmetric(pentagon, rng):
    p = random_placement(pentagon, rng)
    q = random_placement(pentagon, rng)
    assert distance(pentagon, p, q) == distance(pentagon, q, p)
    assert distance(pentagon, p, p) == 0


def test_chord_cycle_splits():
    g = chord_cycle_graph(5, 3)          # gcd(4, 5)... gcd(n-1, m-1) = 2
    assert not is_reconfigurable_bruteforce(g)
    p = random_placement(g, __import__("random").Random(7))
    comp = bfs_component(g, p)
    assert comp.size < state_count(g)


def test_diamond_cycle_reconfigurable():
    assert is_reconfigurable_bruteforce(diamond_cycle_graph(3))


def test_budget_guard():
    g = chord_cycle_graph(8, 2)          # 17 vertices > default bound
    with pytest.raises(OracleBudgetError):
        is_reconfigurable_bruteforce(g)


def test_export_csv(pentagon):
    p = Placement.make(pentagon, [(2, 3), (4, 5)])
    comp = bfs_component(pentagon, p)
    buf = io.StringIO()
    export_csv(comp, buf)
    lines = buf.getvalue().strip().splitlines()
    assert lines[0] == "state_key,distance"
    assert len(lines) == comp.size + 2          # header + rows + summary
