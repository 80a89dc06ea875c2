"""Immutable bitmask graphs on at most 64 vertices.

Vertices are 0..n-1.  Adjacency is one Python int per vertex (bit v of
adj[u] set iff uv is an edge), which keeps neighbourhood algebra down to
a few & | ~ ops.  Edges are stored once, sorted lexicographically with
u < v, and an "edge id" is simply an index into that tuple.  Everything
here is pure; operations return new Graph values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    n: vertex count, 1 <= n <= 64 (isolated vertices are fine).
    adj: per-vertex neighbourhood bitmasks, length n.
    edges: sorted (u, v) pairs with u < v; index = edge id.
    """

    n: int
    adj: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def endpoint_mask(self, edge_id: int) -> int:
        u, v = self.edges[edge_id]
        return (1 << u) | (1 << v)


def build_graph(n: int, edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    """Validate and normalize an edge list into a Graph.

    Pairs are unordered; duplicates (in either orientation) collapse to a
    single edge.  Loops are rejected.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside supported range 1..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edge_pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    edges = tuple(
        (u, v) for u in range(n) for v in bits(adj[u]) if u < v
    )
    return Graph(n=n, adj=tuple(adj), edges=edges)


def degrees(g: Graph) -> tuple[int, ...]:
    return tuple(a.bit_count() for a in g.adj)


def max_degree(g: Graph) -> int:
    return max(a.bit_count() for a in g.adj)


def ore_degree(g: Graph) -> int:
    """max over edges uv of deg(u) + deg(v); undefined on edgeless graphs."""
    if not g.edges:
        raise ValueError("ore degree undefined for edgeless graph")
    return max(g.adj[u].bit_count() + g.adj[v].bit_count() for u, v in g.edges)


def ore_degree_of_subgraph(g: Graph, h_edge_ids: Iterable[int]) -> int:
    """max over subgraph edges uv of deg_G(u) + deg_G(v).

    Degrees are taken in the host graph g, not in the subgraph.
    """
    ids = list(h_edge_ids)
    if not ids:
        raise ValueError("ore degree undefined for empty edge set")
    best = 0
    for e in ids:
        if not 0 <= e < len(g.edges):
            raise ValueError(f"edge id {e} out of range")
        u, v = g.edges[e]
        best = max(best, g.adj[u].bit_count() + g.adj[v].bit_count())
    return best


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge of g, adjacent iff the edges share
    an endpoint.  Needs m <= 64 to fit the bitmask representation."""
    m = len(g.edges)
    if m > MAX_VERTICES:
        raise ValueError(f"line graph needs at most {MAX_VERTICES} edges, got {m}")
    if m == 0:
        raise ValueError("line graph of an edgeless graph is empty")
    masks = [g.endpoint_mask(i) for i in range(m)]
    pairs = [
        (i, j)
        for i in range(m)
        for j in range(i + 1, m)
        if masks[i] & masks[j]
    ]
    return build_graph(m, pairs)


def square(g: Graph) -> Graph:
    """Graph square: join vertices at distance <= 2."""
    rows = []
    for u in range(g.n):
        row = g.adj[u]
        for w in bits(g.adj[u]):
            row |= g.adj[w]
        row &= ~(1 << u)
        rows.append(row)
    pairs = [(u, v) for u in range(g.n) for v in bits(rows[u]) if u < v]
    return build_graph(g.n, pairs)


def edge_distance(g: Graph, e: int, f: int) -> int | None:
    """Distance between edges e and f in the line graph (0 if e == f),
    None when they lie in different components."""
    m = len(g.edges)
    if not (0 <= e < m and 0 <= f < m):
        raise ValueError("edge id out of range")
    if e == f:
        return 0
    masks = [g.endpoint_mask(i) for i in range(m)]
    seen = 1 << e
    frontier = 1 << e
    dist = 0
    while frontier:
        dist += 1
        nxt = 0
        for i in bits(frontier):
            for j in range(m):
                if masks[i] & masks[j] and not (seen >> j) & 1:
                    nxt |= 1 << j
        if (nxt >> f) & 1:
            return dist
        seen |= nxt
        frontier = nxt
    return None


def induced_subgraph(g: Graph, vertices: Iterable[int] | int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the given vertex set (iterable or bitmask).

    Returns (subgraph, mapping) where mapping[i] is the original label of
    the subgraph's vertex i; labels are relabelled in increasing order.
    """
    if isinstance(vertices, int):
        mask = vertices
    else:
        mask = 0
        for v in vertices:
            mask |= 1 << v
    if mask == 0:
        raise ValueError("induced subgraph needs at least one vertex")
    if mask >> g.n:
        raise ValueError("vertex out of range in induced subgraph")
    mapping = tuple(bits(mask))
    index = {v: i for i, v in enumerate(mapping)}
    pairs = [
        (index[u], index[v])
        for u, v in g.edges
        if (mask >> u) & 1 and (mask >> v) & 1
    ]
    return build_graph(len(mapping), pairs), mapping


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Two-colour g if possible.

    Returns (side0, side1) vertex masks with every edge crossing, or None
    when some component has an odd cycle.  Isolated vertices land in side0.
    """
    colour = [-1] * g.n
    side = [0, 0]
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        side[0] |= 1 << s
        queue = [s]
        while queue:
            u = queue.pop()
            for v in bits(g.adj[u]):
                if colour[v] == -1:
                    colour[v] = colour[u] ^ 1
                    side[colour[v]] |= 1 << v
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    return side[0], side[1]


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    return build_graph(g.n, [e for e in g.edges if e != (min(u, v), max(u, v))])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    return build_graph(g.n, list(g.edges) + [(u, v)])
