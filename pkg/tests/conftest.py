import random

import pytest
from hypothesis import HealthCheck, settings

from sparsecut import Graph, build_graph

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def g_from_edges(n, edges) -> Graph:
    return build_graph(n, edges)


@pytest.fixture
def k3():
    return build_graph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def c4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5():
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def k4():
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def path3():
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def star4():
    return build_graph(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def bowtie():
    # two triangles sharing vertex 0
    return build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


@pytest.fixture
def two_triangles_bridge():
    # triangles 0-1-2 and 3-4-5 joined by the bridge 2-3
    return build_graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])


@pytest.fixture
def petersen():
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    ]
    return build_graph(10, edges)


@pytest.fixture
def c4_pendant_triangle():
    # C4 on 0..3 plus triangle 0-4-5 hanging off the articulation vertex 0
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 0)])


def random_connected_graph(rng: random.Random, n: int, m: int) -> Graph:
    """Small random connected graph: random tree plus m - (n-1) extra edges."""
    edges = set()
    for v in range(1, n):
        p = rng.randrange(v)
        edges.add((p, v))
    pool = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges
    ]
    rng.shuffle(pool)
    for e in pool[: max(0, m - (n - 1))]:
        edges.add(e)
    return build_graph(n, sorted(edges))
