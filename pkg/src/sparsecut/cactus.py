"""Constrained near-perfect cuts of connected graphs without even cycles.

Such a graph (an "odd cactus") has y = m - n + 1 pairwise edge-disjoint
odd cycles and maximum cut m - y: a maximum cut misses exactly one edge
per odd cycle and cuts every bridge. This module decides, for disjoint
forced vertex sets A and B, whether a cut of size exactly m - y with
A and B on opposite sides exists, and constructs one when it does.

The decision walks the graph's decomposition: every non-tail component is
an IOC tree attached to the rest by exactly two edges into a single later
vertex (a third edge would close an even cycle). Each such piece carries
one odd cycle and must lose exactly one edge on it, which pins every
piece vertex up to the choice of the lost edge; feasibility per root side
reduces to a parity scan around the piece's cycle. Roots feasible for only
one side become new constraints; the tree tail is then 2-colored against
everything accumulated, and assignments are replayed backwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .decompose import (
    KIND_IOC_TREE,
    KIND_TREE,
    Component,
    _path_in_component,
    tree_bipartite_decompose,
)
from .graph import (
    SIDE_A,
    SIDE_B,
    Cut,
    EvenCycleWitness,
    Graph,
    GraphError,
    is_even_cycle_free,
)


@dataclass(frozen=True)
class PartialAssignment:
    """Per-vertex constraint: SIDE_A, SIDE_B or None (unfixed)."""

    side: tuple[Optional[int], ...]

    @classmethod
    def empty(cls, n: int) -> "PartialAssignment":
        return cls((None,) * n)

    @classmethod
    def from_sets(
        cls, n: int, side_a: Sequence[int] = (), side_b: Sequence[int] = ()
    ) -> "PartialAssignment":
        side: list[Optional[int]] = [None] * n
        for v in side_a:
            side[v] = SIDE_A
        for v in side_b:
            if side[v] == SIDE_A:
                raise GraphError(f"vertex {v} constrained to both sides")
            side[v] = SIDE_B
        return cls(tuple(side))

    @property
    def n(self) -> int:
        return len(self.side)

    def fixed_count(self) -> int:
        return sum(1 for s in self.side if s is not None)

    def respected_by(self, cut: Cut) -> bool:
        return all(s is None or cut.side[v] == s for v, s in enumerate(self.side))


def piece_feasible(
    g: Graph,
    piece: Component,
    root_side: int,
    constraints: Sequence[Optional[int]],
) -> Optional[dict[int, int]]:
    """Assignment of an IOC piece losing exactly one edge on its odd cycle.

    The piece is the component's induced tree plus its root and the two
    recorded root edges. Off-cycle piece edges are bridges of the piece
    and must all be cut, which projects every constraint onto the cycle;
    the cycle then needs exactly one "defect" edge, placed in the unique
    gap between consecutive constrained cycle positions whose parity
    relation fails. Returns vertex -> side for the piece (including the
    root) or None when infeasible.
    """
    if piece.kind != KIND_IOC_TREE or len(piece.roots) != 1 or len(piece.root_edges) != 2:
        raise GraphError("piece must be an IOC tree with one root and two root edges")
    r = piece.roots[0]
    (r1, a), (r2, b) = piece.root_edges
    if r1 != r or r2 != r or not g.has_edge(r, a) or not g.has_edge(r, b) or a == b:
        raise GraphError("malformed root edges")
    verts = set(piece.vertices)
    if a not in verts or b not in verts or r in verts:
        raise GraphError("root edges must join the piece to an outside root")

    path = _path_in_component(g, verts, a, b)
    if path is None:
        raise GraphError("attachment points are not connected inside the piece")
    ring = [r] + path
    L = len(ring)  # number of cycle edges (ring closes back to r)
    if L % 2 == 0:
        raise GraphError("piece cycle has even length")
    pos = {v: i for i, v in enumerate(ring)}

    # hang every off-cycle vertex below its nearest cycle vertex
    anchor_pos: dict[int, int] = {}
    par_flip: dict[int, int] = {}
    queue = []
    for v in ring[1:]:
        anchor_pos[v] = pos[v]
        par_flip[v] = 0
        queue.append(v)
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for w in g.adjacency[v]:
            if w in verts and w not in anchor_pos:
                anchor_pos[w] = anchor_pos[v]
                par_flip[w] = par_flip[v] ^ 1
                queue.append(w)

    # project constraints onto cycle positions
    want: dict[int, int] = {0: root_side}
    if constraints[r] is not None and constraints[r] != root_side:
        return None
    for v in piece.vertices:
        cv = constraints[v]
        if cv is None:
            continue
        p = anchor_pos[v]
        s = cv ^ par_flip[v]
        if want.setdefault(p, s) != s:
            return None

    # the defect edge sits in the unique failing gap between consecutive
    # constrained positions; the total parity around an odd cycle forces an
    # odd number of failing gaps, so anything but exactly one is infeasible
    ks = sorted(want)
    fails = []
    for idx, k in enumerate(ks):
        k2 = ks[(idx + 1) % len(ks)]
        arc = (k2 - k) % L
        if arc == 0:
            arc = L
        if (want[k] ^ want[k2]) != (arc & 1):
            fails.append(k)
    assert len(fails) % 2 == 1, "parity bookkeeping around an odd cycle broke"
    if len(fails) != 1:
        return None
    defect = fails[0]  # defect edge joins ring[defect] and ring[defect+1]

    colors = [0] * L
    start = (defect + 1) % L
    anchor = ks[0]
    s0 = want[anchor] ^ (((anchor - start) % L) & 1)
    for i in range(L):
        colors[(start + i) % L] = s0 ^ (i & 1)
    for k, s in want.items():
        assert colors[k] == s

    out = {r: root_side}
    for v in piece.vertices:
        out[v] = colors[anchor_pos[v]] ^ par_flip[v]
    return out


def _tree_full_cut(
    g: Graph, verts: Sequence[int], constraints: Sequence[Optional[int]]
) -> Optional[dict[int, int]]:
    """2-coloring of an induced tree cutting every induced edge, or None."""
    vset = set(verts)
    anchor = min(verts)
    rel = {anchor: 0}
    queue = [anchor]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for w in g.adjacency[v]:
            if w in vset and w not in rel:
                rel[w] = rel[v] ^ 1
                queue.append(w)
    if len(rel) != len(vset):
        raise GraphError("tail is not connected")
    flip: Optional[int] = None
    for v in sorted(vset):
        cv = constraints[v]
        if cv is None:
            continue
        f = cv ^ rel[v]
        if flip is None:
            flip = f
        elif flip != f:
            return None
    if flip is None:
        flip = SIDE_A
    return {v: rel[v] ^ flip for v in vset}


def constrained_cactus_cut(g: Graph, pa: PartialAssignment) -> Optional[Cut]:
    """Cut of size exactly m - y extending ``pa``, or None if impossible.

    Requires a connected graph without even cycles (y is its odd cycle
    count). Runs in near-linear time.
    """
    if pa.n != g.n:
        raise GraphError(f"assignment covers {pa.n} of {g.n} vertices")
    cycles = is_even_cycle_free(g)
    if isinstance(cycles, EvenCycleWitness):
        raise GraphError("graph contains an even cycle")
    y = len(cycles)
    target = g.m - y

    d = tree_bipartite_decompose(g)
    comps = d.components
    tail = comps[-1]
    if tail.kind != KIND_TREE:
        raise GraphError("decomposition of an even-cycle-free graph must end in a tree")
    pieces = comps[:-1]
    for piece in pieces:
        if piece.kind != KIND_IOC_TREE:
            raise GraphError("even-cycle-free graph decomposed into a non-IOC piece")

    work: list[Optional[int]] = list(pa.side)
    memos: list[dict[int, dict[int, int]]] = []
    for piece in pieces:
        r = piece.roots[0]
        allowed = (work[r],) if work[r] is not None else (SIDE_A, SIDE_B)
        memo: dict[int, dict[int, int]] = {}
        for s in allowed:
            res = piece_feasible(g, piece, s, work)
            if res is not None:
                memo[s] = res
        if not memo:
            return None
        if len(memo) == 1 and work[r] is None:
            work[r] = next(iter(memo))
        memos.append(memo)

    tail_assign = _tree_full_cut(g, tail.vertices, work)
    if tail_assign is None:
        return None

    final: list[Optional[int]] = [None] * g.n
    for v, s in tail_assign.items():
        final[v] = s
    for piece, memo in zip(reversed(pieces), reversed(memos)):
        r = piece.roots[0]
        s = final[r]
        assert s is not None and s in memo, "backward replay lost a root assignment"
        for v, sv in memo[s].items():
            final[v] = sv

    cut = Cut.from_sides(g, final)  # type: ignore[arg-type]
    if cut.size != target:
        raise AssertionError(
            f"constructed cut has size {cut.size}, expected {target}"
        )
    return cut
