"""Ordered vertex decomposition into odd-cycle-inducing trees, cyclic
bipartite pieces and a tree tail, plus its validator and certificates.

The construction sweeps a DFS tree in descending preorder. When the vertex
r under the sweep has two edges into one of its child subtrees whose
endpoints sit at odd tree distance, that subtree plus r closes an odd
cycle: the subtree is emitted as an "IOC tree" rooted at r and deleted.
If after those deletions r still has two edges into a single child
subtree, the remaining cycles through r are all even and r's whole subtree
is emitted as a connected bipartite piece with a cycle ("CB graph").
Whatever survives the sweep is a tree. Every emitted piece keeps at least
one edge to a later piece, which is what the greedy merge relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, GraphError, OddCycleWitness, dfs_tree

KIND_IOC_TREE = "ioc_tree"
KIND_CB_GRAPH = "cb_graph"
KIND_TREE = "tree"

_KINDS = (KIND_IOC_TREE, KIND_CB_GRAPH, KIND_TREE)


@dataclass(frozen=True)
class Component:
    """One piece of the decomposition.

    ``roots`` is nonempty exactly for IOC trees: the recorded root is a
    vertex of a strictly later component, and ``root_edges`` are two graph
    edges from the component to that root whose addition closes an odd
    cycle.
    """

    kind: str
    vertices: tuple[int, ...]
    roots: tuple[int, ...] = ()
    root_edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise GraphError(f"unknown component kind {self.kind!r}")

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "roots": list(self.roots),
            "root_edges": [list(e) for e in self.root_edges],
        }


@dataclass(frozen=True)
class Decomposition:
    """Ordered components H_1..H_t partitioning the vertex set."""

    components: tuple[Component, ...]

    @property
    def t(self) -> int:
        return len(self.components)

    def ioc_count(self) -> int:
        return sum(1 for c in self.components if c.kind == KIND_IOC_TREE)

    def component_index(self, n: int) -> list[int]:
        """Array mapping vertex -> index of its component."""
        idx = [-1] * n
        for i, comp in enumerate(self.components):
            for v in comp.vertices:
                idx[v] = i
        return idx

    def to_json_dict(self) -> dict:
        return {"components": [c.to_json_dict() for c in self.components]}


def _find(uf: list[int], v: int) -> int:
    # path halving
    while uf[v] != v:
        uf[v] = uf[uf[v]]
        v = uf[v]
    return v


def tree_bipartite_decompose(g: Graph) -> Decomposition:
    """Decompose a connected graph into IOC trees / CB graphs / tree tail.

    Deterministic: DFS from vertex 0 with ascending neighbor order; when
    several child subtrees of the swept vertex trigger, they are emitted in
    ascending child order. Runs in near-linear time (union-find mapping
    each back edge endpoint to its current child subtree).
    """
    n = g.n
    t = dfs_tree(g, 0)
    pre = t.preorder
    depth = t.depth
    order = t.order
    parent = t.parent
    adj = g.adjacency

    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]  # type: ignore[index]

    # live doubly-linked list over preorder ranks; rank n is the end sentinel
    nxt = list(range(1, n + 1))
    prv = list(range(-1, n))
    alive = [True] * n

    uf = list(range(n))
    uf_size = [1] * n
    uf_top = list(range(n))  # shallowest live vertex of the set

    components: list[Component] = []

    def remove_subtree(top: int) -> list[int]:
        lo = pre[top]
        hi = lo + size[top]
        members = []
        r = lo
        while r < hi:
            v = order[r]
            members.append(v)
            alive[v] = False
            r = nxt[r]
        p = prv[lo]
        if p >= 0:
            nxt[p] = r
        if r <= n:
            prv[r] = p
        return members

    pre_get = pre.__getitem__
    for rank in range(n - 1, -1, -1):
        r = order[rank]
        if not alive[r]:
            continue
        pr = pre[r]
        hi = pr + size[r]
        groups: dict[int, list[int]] = {}
        for w in adj[r]:
            pw = pre[w]
            if pr < pw < hi and alive[w]:
                # find with path halving, inlined for the hot path
                x = w
                while uf[x] != x:
                    uf[x] = uf[uf[x]]
                    x = uf[x]
                c = uf_top[x]
                bucket = groups.get(c)
                if bucket is None:
                    groups[c] = [w]
                else:
                    bucket.append(w)
        survivors = []
        cycle_left = False
        for c in sorted(groups, key=pre_get):
            ws = groups[c]
            if len(ws) == 1:
                survivors.append(c)
                continue
            first: dict[int, int] = {}
            pair: Optional[tuple[int, int]] = None
            for w in ws:
                p = depth[w] & 1
                other = first.get(1 - p)
                if other is not None:
                    pair = (other, w)
                    break
                if p not in first:
                    first[p] = w
            if pair is not None:
                a, b = pair
                members = remove_subtree(c)
                members.sort()
                components.append(
                    Component(
                        KIND_IOC_TREE,
                        tuple(members),
                        roots=(r,),
                        root_edges=((r, a), (r, b)),
                    )
                )
            else:
                cycle_left = True
                survivors.append(c)
        if cycle_left:
            members = remove_subtree(r)
            members.sort()
            components.append(Component(KIND_CB_GRAPH, tuple(members)))
        else:
            for c in survivors:
                ra = _find(uf, r)
                rc = _find(uf, c)
                if ra == rc:
                    continue
                if uf_size[ra] < uf_size[rc]:
                    ra, rc = rc, ra
                uf[rc] = ra
                uf_size[ra] += uf_size[rc]
                uf_top[ra] = r

    remaining = [v for v in range(n) if alive[v]]
    if remaining:
        components.append(Component(KIND_TREE, tuple(remaining)))
    return Decomposition(tuple(components))


@dataclass
class ValidationReport:
    """Outcome of checking a decomposition against its definition."""

    n: int
    t: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, msg: str) -> None:
        self.violations.append(msg)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "t": self.t, "ok": self.ok, "violations": list(self.violations)}


def _induced_edges(g: Graph, verts: set[int]) -> list[tuple[int, int]]:
    out = []
    for v in verts:
        for w in g.adjacency[v]:
            if w > v and w in verts:
                out.append((v, w))
    return out


def _is_connected_within(g: Graph, verts: set[int]) -> bool:
    if not verts:
        return False
    start = next(iter(verts))
    seen = {start}
    queue = [start]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for w in g.adjacency[v]:
            if w in verts and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(verts)


def _two_color_within(g: Graph, verts: set[int]) -> Optional[dict[int, int]]:
    """2-color the induced subgraph; None if an odd cycle prevents it."""
    color: dict[int, int] = {}
    for s in sorted(verts):
        if s in color:
            continue
        color[s] = 0
        queue = [s]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for w in g.adjacency[v]:
                if w not in verts:
                    continue
                if w not in color:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def validate_decomposition(g: Graph, d: Decomposition) -> ValidationReport:
    """Check every defining condition; violations are report entries."""
    report = ValidationReport(n=g.n, t=d.t)
    comps = d.components
    if not comps:
        report.add("decomposition has no components")
        return report

    seen: dict[int, int] = {}
    for i, comp in enumerate(comps):
        for v in comp.vertices:
            if not (0 <= v < g.n):
                report.add(f"component {i}: vertex {v} out of range")
            elif v in seen:
                report.add(f"vertex {v} appears in components {seen[v]} and {i}")
            else:
                seen[v] = i
    if len(seen) != g.n:
        missing = [v for v in range(g.n) if v not in seen]
        report.add(f"vertices not covered: {missing[:10]}")

    for i, comp in enumerate(comps):
        last = i == len(comps) - 1
        if last and comp.kind == KIND_IOC_TREE:
            report.add(f"component {i}: last component may not be an IOC tree")
        if not last and comp.kind == KIND_TREE:
            report.add(f"component {i}: only the last component may be a tree")

    for i, comp in enumerate(comps):
        verts = set(comp.vertices)
        if not verts:
            report.add(f"component {i}: empty vertex set")
            continue
        edges = _induced_edges(g, verts)
        connected = _is_connected_within(g, verts)
        if not connected:
            report.add(f"component {i}: induced subgraph is disconnected")
        if comp.kind in (KIND_IOC_TREE, KIND_TREE):
            if len(edges) != len(verts) - 1 or not connected:
                report.add(f"component {i}: induced subgraph contains a cycle or is not a tree")
        if comp.kind == KIND_CB_GRAPH:
            if len(edges) < len(verts):
                report.add(f"component {i}: CB piece has no cycle (|E| < |V|)")
            if _two_color_within(g, verts) is None:
                report.add(f"component {i}: CB piece is not bipartite")
            if comp.roots:
                report.add(f"component {i}: CB piece should not carry roots")
        if comp.kind == KIND_TREE and comp.roots:
            report.add(f"component {i}: tree tail should not carry roots")
        if comp.kind == KIND_IOC_TREE:
            if not comp.roots:
                report.add(f"component {i}: IOC tree without a root")
                continue
            root = comp.roots[0]
            if seen.get(root, -1) <= i:
                report.add(f"component {i}: root {root} is not in a strictly later component")
            if len(set(comp.root_edges)) != 2:
                report.add(f"component {i}: expected two distinct root edges")
                continue
            endpoints = []
            for u, v in comp.root_edges:
                a, b = (u, v) if v == root else (v, u)
                if b != root or a not in verts or not g.has_edge(a, root):
                    report.add(f"component {i}: root edge ({u}, {v}) does not join the piece to its root")
                    break
                endpoints.append(a)
            if len(endpoints) == 2:
                color = _two_color_within(g, verts)
                if color is None or not connected or len(edges) != len(verts) - 1:
                    pass  # already reported above
                elif color[endpoints[0]] == color[endpoints[1]]:
                    report.add(
                        f"component {i}: root edges close an even cycle (attachment points at even distance)"
                    )

    later: set[int] = set()
    for i in range(len(comps) - 1, -1, -1):
        comp = comps[i]
        if i < len(comps) - 1:
            has_forward = any(w in later for v in comp.vertices for w in g.adjacency[v])
            if not has_forward:
                report.add(f"component {i}: no edge to any later component")
        later.update(comp.vertices)

    return report


def _path_in_component(g: Graph, verts: set[int], a: int, b: int) -> Optional[list[int]]:
    """Path a..b inside the induced subgraph (BFS, ascending neighbors)."""
    if a == b:
        return [a]
    par = {a: a}
    queue = [a]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for w in g.adjacency[v]:
            if w in verts and w not in par:
                par[w] = v
                if w == b:
                    path = [b]
                    while path[-1] != a:
                        path.append(par[path[-1]])
                    path.reverse()
                    return path
                queue.append(w)
    return None


def odd_cycle_certificates(g: Graph, d: Decomposition) -> list[OddCycleWitness]:
    """One odd cycle per IOC tree, through its recorded root edges.

    The cycles are pairwise edge-disjoint (each lives in its component's
    edges plus the two root edges), which certifies that any cut misses at
    least one edge per cycle: max cut <= m - x.
    """
    witnesses = []
    for i, comp in enumerate(d.components):
        if comp.kind != KIND_IOC_TREE:
            continue
        if not comp.roots or len(comp.root_edges) != 2:
            raise GraphError(f"component {i}: IOC tree lacks root data")
        r = comp.roots[0]
        (r1, a), (r2, b) = comp.root_edges
        if r1 != r or r2 != r:
            raise GraphError(f"component {i}: root edges do not share the root")
        verts = set(comp.vertices)
        path = _path_in_component(g, verts, a, b)
        if path is None:
            raise GraphError(f"component {i}: attachment points not connected inside the piece")
        cycle = [r] + path + [r]
        w = OddCycleWitness.from_vertices(cycle)
        w.validate(g)
        witnesses.append(w)
    return witnesses
