import pytest
from hypothesis import given, strategies as st

from sparsecut import (
    Cut,
    DisconnectedError,
    EvenCycleWitness,
    GraphError,
    OddCycleWitness,
    build_graph,
    connected_components,
    cut_size,
    dfs_tree,
    exact_max_cut,
    is_even_cycle_free,
    spanning_tree_cut,
    two_color,
)
from tests.conftest import random_connected_graph

import random


# ---------------------------------------------------------------- build_graph

def test_build_triangle(k3):
    assert k3.n == 3
    assert k3.m == 3
    assert k3.adjacency == ((1, 2), (0, 2), (0, 1))


def test_build_rejects_self_loop():
    with pytest.raises(GraphError, match=r"self-loop \(0, 0\)"):
        build_graph(2, [(0, 0)])


def test_build_rejects_duplicate():
    with pytest.raises(GraphError, match=r"duplicate edge \(0, 1\)"):
        build_graph(4, [(0, 1), (0, 1)])
    with pytest.raises(GraphError, match="duplicate"):
        build_graph(4, [(0, 1), (1, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(GraphError, match="out of range"):
        build_graph(3, [(0, 3)])


def test_has_edge(k3, path3):
    assert k3.has_edge(0, 2) and k3.has_edge(2, 0)
    assert not path3.has_edge(0, 2)


# ------------------------------------------------------------------- dfs_tree

def test_dfs_k3(k3):
    t = dfs_tree(k3, 0)
    assert t.parent == (None, 0, 1)
    assert t.preorder == (0, 1, 2)
    assert t.depth == (0, 1, 2)


def test_dfs_path_depths(path3):
    t = dfs_tree(path3, 0)
    assert t.depth == (0, 1, 2)


def test_dfs_star_depths(star4):
    t = dfs_tree(star4, 0)
    assert t.depth == (0, 1, 1, 1)


def test_dfs_disconnected_names_vertex():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedError, match="vertex 2"):
        dfs_tree(g, 0)


@given(st.integers(0, 10_000), st.integers(3, 12), st.integers(0, 8))
def test_dfs_invariants(seed, n, extra):
    rng = random.Random(seed)
    g = random_connected_graph(rng, n, n - 1 + extra)
    t = dfs_tree(g, 0)
    assert sorted(t.preorder) == list(range(n))
    assert t.preorder[0] == 0 and t.parent[0] is None
    for v in range(1, n):
        p = t.parent[v]
        assert g.has_edge(p, v)
        assert t.depth[v] == t.depth[p] + 1
        assert t.preorder[p] < t.preorder[v]


# ------------------------------------------------------------------ two_color

def test_two_color_even_cycle(c4):
    res = two_color(c4)
    assert isinstance(res, Cut)
    assert res.side == (0, 1, 0, 1)
    assert res.size == 4


def test_two_color_triangle_witness(k3):
    res = two_color(k3)
    assert isinstance(res, OddCycleWitness)
    assert res.length == 3
    res.validate(k3)


def test_two_color_single_edge():
    g = build_graph(2, [(0, 1)])
    res = two_color(g)
    assert isinstance(res, Cut)
    assert res.side[0] != res.side[1]


def test_two_color_handles_disconnected():
    g = build_graph(5, [(0, 1), (2, 3), (3, 4), (4, 2)])
    res = two_color(g)
    assert isinstance(res, OddCycleWitness)  # triangle 2-3-4
    g2 = build_graph(4, [(0, 1), (2, 3)])
    res2 = two_color(g2)
    assert isinstance(res2, Cut)
    assert res2.size == 2


@given(st.integers(0, 10_000), st.integers(2, 12), st.integers(0, 10))
def test_two_color_dichotomy(seed, n, extra):
    rng = random.Random(seed)
    g = random_connected_graph(rng, n, n - 1 + extra)
    res = two_color(g)
    if isinstance(res, Cut):
        assert all(res.side[u] != res.side[v] for u, v in g.edges)
        assert exact_max_cut(g).size == g.m
    else:
        res.validate(g)
        assert exact_max_cut(g).size < g.m


# ------------------------------------------------------------------- cut_size

def test_cut_size_k3(k3):
    cut = Cut.from_sides(k3, [0, 0, 1])
    assert cut.size == 2
    assert cut_size(k3, cut) == 2


def test_cut_size_all_same(bowtie):
    cut = Cut.from_sides(bowtie, [0] * 5)
    assert cut.size == 0


def test_cut_size_alternating(c4):
    assert Cut.from_sides(c4, [0, 1, 0, 1]).size == 4


def test_cut_requires_all_vertices(k3):
    with pytest.raises(GraphError):
        Cut.from_sides(k3, [0, 1])


@given(st.integers(0, 10_000), st.integers(2, 10), st.integers(0, 10))
def test_cut_cache_coherent(seed, n, extra):
    rng = random.Random(seed)
    g = random_connected_graph(rng, n, n - 1 + extra)
    side = [rng.randint(0, 1) for _ in range(n)]
    cut = Cut.from_sides(g, side)
    assert cut.size == cut_size(g, cut)


# ---------------------------------------------------------- is_even_cycle_free

def test_bowtie_has_two_odd_cycles(bowtie):
    res = is_even_cycle_free(bowtie)
    assert isinstance(res, tuple)
    assert len(res) == 2
    seen_edges = set()
    for w in res:
        w.validate(bowtie)
        assert not (w.edge_set() & seen_edges)
        seen_edges |= w.edge_set()


def test_c4_even_witness(c4):
    res = is_even_cycle_free(c4)
    assert isinstance(res, EvenCycleWitness)
    res.validate(c4)


def test_tree_has_no_cycles(star4):
    assert is_even_cycle_free(star4) == ()


def test_theta_graph_even_witness():
    # two vertices joined by three paths of lengths 1, 2, 2
    g = build_graph(4, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])
    res = is_even_cycle_free(g)
    assert isinstance(res, EvenCycleWitness)
    res.validate(g)


def test_even_cycle_free_rejects_disconnected():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedError):
        is_even_cycle_free(g)


@given(st.integers(0, 10_000), st.integers(2, 12), st.integers(0, 8))
def test_even_cycle_free_dichotomy(seed, n, extra):
    rng = random.Random(seed)
    g = random_connected_graph(rng, n, n - 1 + extra)
    res = is_even_cycle_free(g)
    if isinstance(res, EvenCycleWitness):
        res.validate(g)
    else:
        assert len(res) == g.m - g.n + 1
        used = set()
        for w in res:
            w.validate(g)
            assert not (w.edge_set() & used)
            used |= w.edge_set()


# ------------------------------------------------------------ spanning_tree_cut

def test_spanning_tree_cut_tree(star4):
    assert spanning_tree_cut(star4).size == 3


def test_spanning_tree_cut_k3(k3):
    assert spanning_tree_cut(k3).size == 2


def test_spanning_tree_cut_bowtie(bowtie):
    cut = spanning_tree_cut(bowtie)
    assert cut.size == 4
    assert exact_max_cut(bowtie).size == 4


@given(st.integers(0, 10_000), st.integers(2, 12))
def test_spanning_tree_cut_exact_on_odd_cacti(seed, n):
    from sparsecut import random_cactus

    g = random_cactus(n, odd_only=True, rng=random.Random(seed))
    res = is_even_cycle_free(g)
    assert isinstance(res, tuple)
    cut = spanning_tree_cut(g)
    assert cut.size == g.n - 1 == g.m - len(res)
    if g.n <= 14:
        assert exact_max_cut(g).size == cut.size


# ------------------------------------------------------- connected_components

def test_components_split():
    g = build_graph(5, [(0, 1), (3, 2)])
    assert connected_components(g) == [[0, 1], [2, 3], [4]]
