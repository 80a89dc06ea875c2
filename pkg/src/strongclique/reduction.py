"""Witness-anchored reductions.

Two tools live here.  bipartite_reduction cuts out the second
neighbourhood of a witness edge; for {C3, C5}-free graphs whose anchor
lies in a maximum witness, the cut-out core is bipartite and preserves
the strong clique number (both facts are asserted in tests, not here:
the operation itself is total).

find_h_sided_path turns any strong clique H with more than Delta edges
into a long path certificate: a path whose first and last edges belong
to H and which keeps absorbing H-edges until every one of them touches
the path interior (or is the chord between the path's two ends).  The
terminal accounting then forces at least ceil((e(H)-2)/(Delta-1)) + 2
vertices, which is how the forbidden-cycle-window bounds get their
contradiction.  The step rule is deterministic: lowest edge id first,
ends checked before disjoint absorption, the two connecting orientations
probed in a fixed order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cliques import StrongCliqueWitness, strong_adjacency
from .graph import Graph, bits, induced_subgraph, max_degree


@dataclass(frozen=True)
class ReductionResult:
    core: Graph
    vertex_map: tuple[int, ...]  # core label -> original label
    anchor: int  # edge id in the original graph


def _witness_ids(witness) -> list[int]:
    if isinstance(witness, StrongCliqueWitness):
        return sorted(witness.edge_ids)
    return sorted(set(witness))


def bipartite_reduction(g: Graph, witness) -> ReductionResult:
    """Induced subgraph on N(u) + N(v) + N(N[u]) + N(N[v]) for the witness
    edge uv with the lowest edge id (the anchor).  u and v are inside
    since each neighbours the other."""
    ids = _witness_ids(witness)
    if not ids:
        raise ValueError("reduction needs a nonempty witness")
    anchor = ids[0]
    if not 0 <= anchor < g.m:
        raise ValueError(f"edge id {anchor} out of range")
    u, v = g.edges[anchor]
    closed_u = g.adj[u] | (1 << u)
    closed_v = g.adj[v] | (1 << v)
    second_u = 0
    for w in bits(closed_u):
        second_u |= g.adj[w]
    second_v = 0
    for w in bits(closed_v):
        second_v |= g.adj[w]
    keep = g.adj[u] | g.adj[v] | second_u | second_v
    core, mapping = induced_subgraph(g, keep)
    return ReductionResult(core=core, vertex_map=mapping, anchor=anchor)


@dataclass(frozen=True)
class HSidedPath:
    vertices: tuple[int, ...]
    h_edge_ids: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class PathStep:
    vertices: tuple[int, ...]
    case: str  # "case1" | "case2.1" | "case2.2"


def h_sided_order_bound(h_size: int, delta: int) -> int:
    """ceil((h_size - 2) / (delta - 1)) + 2, the guaranteed terminal order."""
    if delta < 2:
        raise ValueError("order bound needs max degree at least 2")
    return -((h_size - 2) // -(delta - 1)) + 2


def _edge_id_lookup(g: Graph) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(g.edges)}


def _check_path_state(g: Graph, h_set: frozenset[int], w: Sequence[int]) -> None:
    if len(w) < 3:
        raise ValueError("path state needs at least 3 vertices")
    if len(set(w)) != len(w):
        raise ValueError("path state has repeated vertices")
    for a, b in zip(w, w[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"path state not a path: {a} and {b} not adjacent")
    lookup = _edge_id_lookup(g)
    for a, b in ((w[0], w[1]), (w[-2], w[-1])):
        i = lookup.get((min(a, b), max(a, b)))
        if i is None or i not in h_set:
            raise ValueError("path state must start and end with witness edges")


def _pending_edges(
    g: Graph, h_ids: list[int], h_set: frozenset[int], w: Sequence[int]
) -> list[int]:
    """H-edges not yet accounted for: not incident to the interior of w and
    not the chord between w's two ends."""
    interior_mask = 0
    for x in w[1:-1]:
        interior_mask |= 1 << x
    lookup = _edge_id_lookup(g)
    ends = (min(w[0], w[-1]), max(w[0], w[-1]))
    chord = lookup.get(ends)
    pending = []
    for i in h_ids:
        a, b = g.edges[i]
        if (interior_mask >> a) & 1 or (interior_mask >> b) & 1:
            continue
        if chord is not None and i == chord and chord in h_set:
            continue
        pending.append(i)
    return pending


def step_h_sided_path(g: Graph, h, w_star: Sequence[int]) -> PathStep | None:
    """One growth step.  None when every witness edge is already accounted
    for (terminal state)."""
    h_ids = _witness_ids(h)
    h_set = frozenset(h_ids)
    w = list(w_star)
    _check_path_state(g, h_set, w)
    pending = _pending_edges(g, h_ids, h_set, w)
    if not pending:
        return None
    first, last = w[0], w[-1]
    for i in pending:
        a, b = g.edges[i]
        if a == last or b == last:
            fresh = b if a == last else a
            return PathStep(vertices=tuple(w + [fresh]), case="case1")
        if a == first or b == first:
            fresh = b if a == first else a
            return PathStep(vertices=tuple([fresh] + w), case="case1")
    # lowest pending edge is vertex-disjoint from the path; connect it to
    # the path's final witness edge
    i = pending[0]
    a, b = g.edges[i]
    x_i, y_i = w[-2], w[-1]
    if g.has_edge(x_i, a):
        return PathStep(vertices=tuple(w[:-1] + [a, b]), case="case2.1")
    if g.has_edge(x_i, b):
        return PathStep(vertices=tuple(w[:-1] + [b, a]), case="case2.1")
    if g.has_edge(y_i, a):
        return PathStep(vertices=tuple(w + [a, b]), case="case2.2")
    if g.has_edge(y_i, b):
        return PathStep(vertices=tuple(w + [b, a]), case="case2.2")
    raise AssertionError("pending edge not reachable; strong clique guarantee broken")


def _initial_path(g: Graph, h_ids: list[int]) -> list[int]:
    edges = [g.edges[i] for i in h_ids]
    for ei in range(len(edges)):
        a, b = edges[ei]
        for fi in range(ei + 1, len(edges)):
            c, d = edges[fi]
            if a in (c, d) or b in (c, d):
                continue
            for p, q in ((a, c), (a, d), (b, c), (b, d)):
                if g.has_edge(p, q):
                    head = b if p == a else a
                    tail = d if q == c else c
                    return [head, p, q, tail]
            raise AssertionError(
                "disjoint witness edges with no connecting edge; not a strong clique"
            )
    # every pair of witness edges shares a vertex: with e(H) > Delta the
    # family cannot be a star, so it is the edge set of one triangle
    verts = sorted({v for e in edges for v in e})
    if len(verts) != 3 or len(edges) != 3:
        raise AssertionError("pairwise incident witness that is not a triangle")
    return verts


def find_h_sided_path(g: Graph, h) -> HSidedPath:
    """Run the growth to termination and verify the order bound.

    Precondition: h is a strong clique with more than Delta edges.
    """
    h_ids = _witness_ids(h)
    h_set = frozenset(h_ids)
    delta = max_degree(g)
    if len(h_ids) <= delta:
        raise ValueError(
            f"witness has {len(h_ids)} edges, needs more than the max degree {delta}"
        )
    rows = strong_adjacency(g)
    for i in h_ids:
        if not 0 <= i < g.m:
            raise ValueError(f"edge id {i} out of range")
        for j in h_ids:
            if i < j and not (rows[i] >> j) & 1:
                raise ValueError(f"witness edges {i} and {j} not within distance 2")

    w = _initial_path(g, h_ids)
    for _ in range(g.n + 2):
        step = step_h_sided_path(g, h_ids, w)
        if step is None:
            result = HSidedPath(vertices=tuple(w), h_edge_ids=h_set)
            needed = h_sided_order_bound(len(h_ids), delta)
            if result.order < needed:
                raise AssertionError(
                    f"terminal path on {result.order} vertices below bound {needed}"
                )
            return result
        w = list(step.vertices)
    raise AssertionError("path growth failed to terminate; implementation bug")
