"""Immutable graph core: construction, DFS, 2-coloring, cycle machinery.

Vertices are always 0..n-1. Graphs are simple (no self-loops, no parallel
edges) and undirected. Adjacency lists are kept sorted ascending so every
traversal in the package is reproducible.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Optional, Sequence, Union

SIDE_A = 0
SIDE_B = 1


class GraphError(ValueError):
    """Malformed graph data or a violated operation precondition."""


class DisconnectedError(GraphError):
    """An operation that needs a connected graph received a disconnected one."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` stores each edge once as (u, v) with u < v; ``adjacency[v]``
    lists the neighbors of v sorted ascending.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v


def build_graph(n: int, edge_list: Sequence[tuple[int, int]]) -> Graph:
    """Validate and build a :class:`Graph`.

    Rejects self-loops, duplicate edges and out-of-range endpoints; the
    error message names the offending pair.
    """
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    seen = set()
    edges = []
    adj = [[] for _ in range(n)]
    for pair in edge_list:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        a, b = (u, v) if u < v else (v, u)
        if (a, b) in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add((a, b))
        edges.append((a, b))
        adj[a].append(b)
        adj[b].append(a)
    for lst in adj:
        lst.sort()
    return Graph(n, tuple(edges), tuple(tuple(lst) for lst in adj))


@dataclass(frozen=True)
class Cut:
    """Two-sided vertex partition with its cached size.

    ``side[v]`` is SIDE_A or SIDE_B for every vertex; ``size`` caches the
    number of bichromatic edges and always matches a recount.
    """

    n: int
    side: tuple[int, ...]
    size: int

    @classmethod
    def from_sides(cls, g: Graph, side: Sequence[int]) -> "Cut":
        if len(side) != g.n:
            raise GraphError(f"cut assigns {len(side)} of {g.n} vertices")
        side = tuple(side)
        for v, s in enumerate(side):
            if s not in (SIDE_A, SIDE_B):
                raise GraphError(f"vertex {v} has invalid side {s!r}")
        size = sum(1 for u, v in g.edges if side[u] != side[v])
        return cls(g.n, side, size)

    def side_a(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == SIDE_A]

    def side_b(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == SIDE_B]


def cut_size(g: Graph, cut: Cut) -> int:
    """Recount the bichromatic edges of ``cut`` from scratch."""
    if len(cut.side) != g.n:
        raise GraphError(f"cut assigns {len(cut.side)} of {g.n} vertices")
    side = cut.side
    return sum(1 for u, v in g.edges if side[u] != side[v])


@dataclass(frozen=True)
class DfsTree:
    """Deterministic DFS tree: neighbors explored in ascending index order."""

    root: int
    parent: tuple[Optional[int], ...]
    preorder: tuple[int, ...]
    depth: tuple[int, ...]
    order: tuple[int, ...]  # vertices sorted by preorder rank


def dfs_tree(g: Graph, root: int = 0) -> DfsTree:
    """Depth-first search tree of a connected graph.

    Raises :class:`DisconnectedError` naming an unreached vertex if the
    graph is not connected.
    """
    n = g.n
    adj = g.adjacency
    parent: list[Optional[int]] = [None] * n
    pre = [-1] * n
    depth = [0] * n
    pre[root] = 0
    order = [root]
    counter = 1
    v_stack = [root]
    it_stack = [iter(adj[root])]
    while v_stack:
        w = next(it_stack[-1], -1)
        if w < 0:
            v_stack.pop()
            it_stack.pop()
            continue
        if pre[w] < 0:
            v = v_stack[-1]
            parent[w] = v
            depth[w] = depth[v] + 1
            pre[w] = counter
            counter += 1
            order.append(w)
            v_stack.append(w)
            it_stack.append(iter(adj[w]))
    if counter < n:
        missing = pre.index(-1)
        raise DisconnectedError(f"graph is not connected: vertex {missing} unreachable from {root}")
    return DfsTree(root, tuple(parent), tuple(pre), tuple(depth), tuple(order))


@dataclass(frozen=True)
class OddCycleWitness:
    """Closed walk of odd length: cycle[0] == cycle[-1], vertices otherwise distinct."""

    cycle: tuple[int, ...]
    length: int

    @classmethod
    def from_vertices(cls, cycle: Sequence[int]) -> "OddCycleWitness":
        return cls(tuple(cycle), len(cycle) - 1)

    def edge_set(self) -> frozenset[frozenset[int]]:
        cyc = self.cycle
        return frozenset(frozenset((cyc[i], cyc[i + 1])) for i in range(len(cyc) - 1))

    def validate(self, g: Graph) -> None:
        _validate_cycle(g, self.cycle, self.length, want_odd=True)


@dataclass(frozen=True)
class EvenCycleWitness:
    """Closed walk of even length witnessing a non-tree, non-odd-cactus structure."""

    cycle: tuple[int, ...]
    length: int

    @classmethod
    def from_vertices(cls, cycle: Sequence[int]) -> "EvenCycleWitness":
        return cls(tuple(cycle), len(cycle) - 1)

    def validate(self, g: Graph) -> None:
        _validate_cycle(g, self.cycle, self.length, want_odd=False)


def _validate_cycle(g: Graph, cycle: tuple[int, ...], length: int, want_odd: bool) -> None:
    if len(cycle) < 4 or cycle[0] != cycle[-1]:
        raise GraphError(f"not a closed walk: {cycle}")
    if length != len(cycle) - 1:
        raise GraphError(f"cached length {length} does not match walk {cycle}")
    if length % 2 != (1 if want_odd else 0):
        raise GraphError(f"cycle {cycle} has wrong parity")
    if len(set(cycle[:-1])) != length:
        raise GraphError(f"cycle {cycle} repeats a vertex")
    for i in range(length):
        if not g.has_edge(cycle[i], cycle[i + 1]):
            raise GraphError(f"cycle uses missing edge ({cycle[i]}, {cycle[i + 1]})")


def two_color(g: Graph) -> Union[Cut, OddCycleWitness]:
    """2-color the graph or return an odd cycle that prevents it.

    Works per connected component; the smallest vertex of each component
    is anchored to SIDE_A, so results are reproducible.
    """
    n = g.n
    adj = g.adjacency
    color: list[Optional[int]] = [None] * n
    parent: list[Optional[int]] = [None] * n
    for s in range(n):
        if color[s] is not None:
            continue
        color[s] = SIDE_A
        queue = [s]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            cv = color[v]
            for w in adj[v]:
                cw = color[w]
                if cw is None:
                    color[w] = cv ^ 1
                    parent[w] = v
                    queue.append(w)
                elif cw == cv:
                    return _odd_cycle_from_conflict(parent, color, v, w)
    return Cut.from_sides(g, color)  # type: ignore[arg-type]


def _odd_cycle_from_conflict(parent, color, u, w) -> OddCycleWitness:
    # BFS colors equal parity of BFS depth, so walking both endpoints up to
    # their lowest common ancestor yields an odd closed walk.
    anc_u = [u]
    anc_w = [w]
    seen = {u: 0}
    x = u
    while parent[x] is not None:
        x = parent[x]
        seen[x] = len(anc_u)
        anc_u.append(x)
    x = w
    while x not in seen:
        x = parent[x]
        anc_w.append(x)
    lca = anc_w[-1]
    path_u = anc_u[: seen[lca] + 1]  # u .. lca
    cycle = path_u + list(reversed(anc_w[:-1])) + [u]
    return OddCycleWitness.from_vertices(cycle)


def spanning_tree_cut(g: Graph) -> Cut:
    """Cut from 2-coloring a DFS spanning tree by depth parity.

    On a connected graph with no even cycles this cut has size exactly
    n - 1 = m - y where y is the number of (edge-disjoint) odd cycles:
    every non-tree edge closes an odd cycle and is therefore uncut.
    """
    t = dfs_tree(g, 0)
    return Cut.from_sides(g, [d & 1 for d in t.depth])


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted ascending."""
    n = g.n
    adj = g.adjacency
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(queue))
    return comps


def subgraph_from_edges(
    vertices: Sequence[int], edges: Sequence[tuple[int, int]]
) -> tuple[Graph, tuple[int, ...]]:
    """Graph on an explicit vertex/edge set, relabeled to 0..k-1.

    Returns the relabeled graph and the sorted original ids; original id of
    sub-vertex i is ``ids[i]``.
    """
    ids = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(ids)}
    sub_edges = [(index[u], index[v]) for u, v in edges]
    return build_graph(len(ids), sub_edges), ids


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``, relabeled to 0..k-1."""
    ids = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(ids)}
    sub_edges = []
    for v in ids:
        iv = index[v]
        for w in g.adjacency[v]:
            if w > v and w in index:
                sub_edges.append((iv, index[w]))
    return build_graph(len(ids), sub_edges), ids


def _biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge lists of the biconnected blocks (standard low-link pass, iterative)."""
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    parent: list[Optional[int]] = [None] * n
    cursor = [0] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[list[tuple[int, int]]] = []
    timer = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = timer
        timer += 1
        stack = [s]
        while stack:
            v = stack[-1]
            nbrs = adj[v]
            if cursor[v] < len(nbrs):
                w = nbrs[cursor[v]]
                cursor[v] += 1
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    stack.append(w)
                elif w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    u = stack[-1]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] >= disc[u]:
                        blk = []
                        while True:
                            e = edge_stack.pop()
                            blk.append(e)
                            if e == (u, v):
                                break
                        blocks.append(blk)
    assert not edge_stack
    return blocks


def _cycle_order_block(block_edges: list[tuple[int, int]]) -> list[int]:
    """Vertex walk of a block that is a single cycle, anchored at its min vertex."""
    nbrs: dict[int, list[int]] = {}
    for u, v in block_edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    start = min(nbrs)
    walk = [start, min(nbrs[start])]
    while walk[-1] != start:
        a, b = nbrs[walk[-1]]
        walk.append(a if a != walk[-2] else b)
    return walk


def _even_cycle_in_block(g: Graph, block_edges: list[tuple[int, int]]) -> EvenCycleWitness:
    """Extract an even simple cycle from a block with more edges than vertices.

    First tries fundamental cycles of a DFS tree of the block; if all are
    odd, combines an odd cycle with a chord or an ear, one of which must
    close an even cycle by parity.
    """
    verts = sorted({v for e in block_edges for v in e})
    nbrs: dict[int, list[int]] = {v: [] for v in verts}
    edge_set = set()
    for u, v in block_edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
        edge_set.add((u, v) if u < v else (v, u))
    for v in nbrs:
        nbrs[v].sort()

    root = verts[0]
    depth = {root: 0}
    par: dict[int, Optional[int]] = {root: None}
    stack = [root]
    while stack:
        v = stack.pop()
        for w in nbrs[v]:
            if w not in depth:
                depth[w] = depth[v] + 1
                par[w] = v
                stack.append(w)
    tree_edges = {(par[v], v) if par[v] < v else (v, par[v]) for v in verts if par[v] is not None}

    first_odd: Optional[list[int]] = None
    for u, v in sorted(edge_set - tree_edges):
        # fundamental cycle through the spanning tree: u..lca..v plus (v, u)
        au, av = [u], [v]
        while depth[au[-1]] > depth[av[-1]]:
            au.append(par[au[-1]])
        while depth[av[-1]] > depth[au[-1]]:
            av.append(par[av[-1]])
        while au[-1] != av[-1]:
            au.append(par[au[-1]])
            av.append(par[av[-1]])
        cyc = au + list(reversed(av[:-1])) + [u]
        if (len(cyc) - 1) % 2 == 0:
            return EvenCycleWitness.from_vertices(cyc)
        if first_odd is None:
            first_odd = cyc

    assert first_odd is not None, "block with surplus edges has no fundamental cycle"
    ring = first_odd[:-1]
    on_ring = set(ring)
    pos = {v: i for i, v in enumerate(ring)}
    L = len(ring)

    def arc_even_cycle(p: int, q: int, ear: list[int]) -> EvenCycleWitness:
        # ear is a simple p..q path meeting the ring only at its endpoints;
        # the ring splits into two p..q arcs of odd total length, so exactly
        # one of (arc + ear) closures is even
        i, j = pos[p], pos[q]
        if i > j:
            i, j = j, i
            ear = list(reversed(ear))
        arc_a = ring[i : j + 1]           # p .. q along the ring
        arc_b = ring[j:] + ring[: i + 1]  # q .. p the other way
        if (len(arc_a) - 1 + len(ear) - 1) % 2 == 0:
            cyc = arc_a + list(reversed(ear))[1:]
        else:
            cyc = arc_b + ear[1:]
        return EvenCycleWitness.from_vertices(cyc)

    # chord: a non-ring edge joining two ring vertices
    for u, v in sorted(edge_set):
        if u in on_ring and v in on_ring:
            i, j = pos[u], pos[v]
            if (i - j) % L in (1, L - 1):
                continue  # ring edge
            return arc_even_cycle(u, v, [u, v])

    # ear: simple path leaving the ring and coming back at a different vertex
    origin: dict[int, int] = {}
    epar: dict[int, int] = {}
    queue = []
    for c in ring:
        for w in nbrs[c]:
            if w not in on_ring and w not in origin:
                origin[w] = c
                epar[w] = c
                queue.append(w)
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for w in nbrs[x]:
            if w in on_ring:
                if w != origin[x]:
                    ear = [w, x]
                    while ear[-1] not in on_ring:
                        ear.append(epar[ear[-1]])
                    return arc_even_cycle(w, ear[-1], ear)
            elif w not in origin:
                origin[w] = origin[x]
                epar[w] = x
                queue.append(w)
            elif origin[w] != origin[x]:
                left = [x]
                while left[-1] not in on_ring:
                    left.append(epar[left[-1]])
                right = [w]
                while right[-1] not in on_ring:
                    right.append(epar[right[-1]])
                ear = list(reversed(left)) + right
                return arc_even_cycle(ear[0], ear[-1], ear)
    raise AssertionError("2-connected block with surplus edges must contain a chord or an ear")


def is_even_cycle_free(
    g: Graph,
) -> Union[tuple[OddCycleWitness, ...], EvenCycleWitness]:
    """Decide whether a connected graph has an even cycle.

    Returns the tuple of its odd cycles (pairwise edge-disjoint, exactly
    m - n + 1 of them) when there is none, and an :class:`EvenCycleWitness`
    otherwise. A graph is even-cycle-free iff every biconnected block is a
    single edge or an odd cycle.
    """
    dfs_tree(g, 0)  # connectivity check
    odd: list[OddCycleWitness] = []
    for blk in _biconnected_blocks(g):
        if len(blk) == 1:
            continue
        verts = {v for e in blk for v in e}
        if len(blk) == len(verts):
            walk = _cycle_order_block(blk)
            if (len(walk) - 1) % 2 == 1:
                odd.append(OddCycleWitness.from_vertices(walk))
            else:
                return EvenCycleWitness.from_vertices(walk)
        else:
            return _even_cycle_in_block(g, blk)
    return tuple(odd)
