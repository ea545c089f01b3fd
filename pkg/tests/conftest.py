import random

import pytest

from trigrid.grid import TriGridGraph, build_graph, hexagon_points
from trigrid.matching import near_perfect_matching
from trigrid.placement import Placement


def random_placement(g: TriGridGraph, rng: random.Random) -> Placement:
    v = rng.choice(list(g.vertex_ids))
    m = near_perfect_matching(g, v)
    assert m is not None
    edges = sorted(m.edges)
    rng.shuffle(edges)
    return Placement.make(g, edges)


@pytest.fixture
def rng():
    return random.Random(20260826)


@pytest.fixture(scope="session")
def pentagon():
    return build_graph([(0, 0), (1, 0), (2, 0), (0, 1), (1, 1)], name="pentagon")


@pytest.fixture(scope="session")
def hex7():
    return build_graph(hexagon_points(1), name="hex7")
