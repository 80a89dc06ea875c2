"""Fixed-length cycle and path detection, cycle profiles, and the two
path-related edge-counting checks (k-branching edges out of a set, and
the path-free edge bound).

Detection is plain DFS over simple paths with symmetry breaking: a
k-cycle is searched from its minimum vertex only, and a closing is
accepted only in one direction (second vertex smaller than the last).
Exponential in the worst case, which is fine at desk scale; callers that
only need "is there any cycle of length k <= L" should go through
cycle_profile and reuse it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import Graph, bits, build_graph


def find_cycle(g: Graph, k: int) -> tuple[int, ...] | None:
    """A cycle on exactly k vertices as a vertex tuple, or None.

    The witness starts at its minimum vertex; consecutive entries (and the
    wrap-around pair) are adjacent.
    """
    if k < 3 or k > g.n:
        raise ValueError(f"cycle length {k} out of range 3..{g.n}")
    adj = g.adj
    for s in range(g.n):
        high = ~((1 << (s + 1)) - 1)
        path = [s]
        found = _cycle_dfs(adj, s, k, path, 1 << s, high)
        if found is not None:
            return found
    return None


def _cycle_dfs(
    adj: tuple[int, ...], s: int, k: int, path: list[int], visited: int, high: int
) -> tuple[int, ...] | None:
    cur = path[-1]
    if len(path) == k:
        if (adj[cur] >> s) & 1 and path[1] < path[-1]:
            return tuple(path)
        return None
    for v in bits(adj[cur] & ~visited & high):
        path.append(v)
        found = _cycle_dfs(adj, s, k, path, visited | (1 << v), high)
        if found is not None:
            return found
        path.pop()
    return None


def contains_cycle(g: Graph, k: int) -> bool:
    return find_cycle(g, k) is not None


def find_path(g: Graph, order: int) -> tuple[int, ...] | None:
    """A simple path on exactly `order` vertices, or None.

    Witness is reported with its smaller endpoint first.
    """
    if order < 1 or order > g.n:
        raise ValueError(f"path order {order} out of range 1..{g.n}")
    if order == 1:
        return (0,)
    for s in range(g.n):
        path = [s]
        found = _path_dfs(g.adj, order, path, 1 << s)
        if found is not None:
            return found
    return None


def _path_dfs(
    adj: tuple[int, ...], order: int, path: list[int], visited: int
) -> tuple[int, ...] | None:
    cur = path[-1]
    if len(path) == order:
        return tuple(path) if path[0] < path[-1] else None
    for v in bits(adj[cur] & ~visited):
        path.append(v)
        found = _path_dfs(adj, order, path, visited | (1 << v))
        if found is not None:
            return found
        path.pop()
    return None


def contains_path(g: Graph, order: int) -> bool:
    return find_path(g, order) is not None


def has_path_between(g: Graph, u: int, v: int, order: int) -> bool:
    """Is there a simple u..v path on exactly `order` vertices?

    Used for edge-toggle legality: adding uv creates a cycle of length L
    exactly when the old graph has a u..v path on L vertices.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    if order < 2 or order > g.n:
        return False
    return _between_dfs(g.adj, v, order, [u], 1 << u)


def _between_dfs(
    adj: tuple[int, ...], target: int, order: int, path: list[int], visited: int
) -> bool:
    cur = path[-1]
    if len(path) == order:
        return cur == target
    cand = adj[cur] & ~visited
    if len(path) < order - 1:
        cand &= ~(1 << target)
    for v in bits(cand):
        path.append(v)
        if _between_dfs(adj, target, order, path, visited | (1 << v)):
            return True
        path.pop()
    return False


def _component_count(g: Graph) -> int:
    seen = 0
    count = 0
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        count += 1
        stack = [s]
        seen |= 1 << s
        while stack:
            u = stack.pop()
            fresh = g.adj[u] & ~seen
            seen |= fresh
            stack.extend(bits(fresh))
    return count


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, None for forests."""
    if g.m == g.n - _component_count(g):
        return None
    for k in range(3, g.n + 1):
        if find_cycle(g, k) is not None:
            return k
    raise AssertionError("non-forest graph with no cycle found")


@dataclass(frozen=True)
class CycleProfile:
    """Cycle/path census of one graph up to a length window.

    has_cycle covers lengths 3..max_len, has_path covers orders
    2..min(max_len + 1, n).  girth is exact regardless of the window
    (None means acyclic).
    """

    n: int
    max_len: int
    girth: int | None
    has_cycle: dict[int, bool]
    has_path: dict[int, bool]

    def cycle_free(self, k: int) -> bool:
        """No cycle on k vertices. Lengths beyond n are free by definition;
        lengths inside (n, window] gap raise."""
        if k < 3:
            raise ValueError(f"cycle length {k} below 3")
        if k > self.n:
            return True
        if k > self.max_len:
            raise ValueError(f"cycle length {k} outside profiled window {self.max_len}")
        return not self.has_cycle[k]

    def path_free(self, order: int) -> bool:
        if order < 2:
            raise ValueError(f"path order {order} below 2")
        if order > self.n:
            return True
        if order > self.max_len + 1:
            raise ValueError(f"path order {order} outside profiled window {self.max_len + 1}")
        return not self.has_path[order]

    def longest_path_order(self) -> int:
        """Largest profiled order carrying a path (1 when edgeless)."""
        present = [o for o, yes in self.has_path.items() if yes]
        return max(present) if present else 1

    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(sorted(k for k, yes in self.has_cycle.items() if yes))


def cycle_profile(g: Graph, max_len: int | None = None, k_max: int = 5) -> CycleProfile:
    """Profile cycles up to max_len (default min(n, 2*k_max + 2)) and paths
    up to one more vertex."""
    if max_len is None:
        max_len = 2 * k_max + 2
    max_len = min(max_len, g.n)
    has_cycle = {k: find_cycle(g, k) is not None for k in range(3, max_len + 1)}
    path_top = min(max_len + 1, g.n)
    has_path = {o: find_path(g, o) is not None for o in range(2, path_top + 1)}
    return CycleProfile(
        n=g.n,
        max_len=max_len,
        girth=girth(g),
        has_cycle=has_cycle,
        has_path=has_path,
    )


# --- edge counting around a vertex set ---


@dataclass(frozen=True)
class BranchingReport:
    base: frozenset[int]
    threshold: int
    edge_ids: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.edge_ids)


def branching_edges(g: Graph, base_set: Iterable[int], b: int) -> BranchingReport:
    """Edges uv with u in the base set, v outside, and v having at least b
    neighbours inside the base set."""
    if b < 1:
        raise ValueError("branching threshold must be at least 1")
    mask = 0
    for v in base_set:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << v
    ids = []
    for i, (u, v) in enumerate(g.edges):
        inside_u = (mask >> u) & 1
        inside_v = (mask >> v) & 1
        if inside_u == inside_v:
            continue
        outside = v if inside_u else u
        if (g.adj[outside] & mask).bit_count() >= b:
            ids.append(i)
    return BranchingReport(base=frozenset(bits(mask)), threshold=b, edge_ids=tuple(ids))


@dataclass(frozen=True)
class KsatReport:
    k: int
    applicable: bool
    count: int
    bound: int
    edge_ids: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return (not self.applicable) or self.count <= self.bound


def check_ksat(g: Graph, x: Iterable[int], k: int) -> KsatReport:
    """Count k-branching edges out of x and compare against k^2 * |x|.

    Applicable when the bipartite-ish cross graph (only edges with exactly
    one endpoint in x) has no path on 2k + 1 vertices.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    mask = 0
    for v in x:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << v
    cross = build_graph(
        g.n,
        [
            (u, v)
            for u, v in g.edges
            if ((mask >> u) & 1) != ((mask >> v) & 1)
        ],
    )
    order = 2 * k + 1
    applicable = order > cross.n or find_path(cross, order) is None
    report = branching_edges(g, bits(mask), k)
    return KsatReport(
        k=k,
        applicable=applicable,
        count=report.count,
        bound=k * k * mask.bit_count(),
        edge_ids=report.edge_ids,
    )


@dataclass(frozen=True)
class ErdosGallaiReport:
    ell: int
    applicable: bool
    edges: int
    bound: Fraction

    @property
    def holds(self) -> bool:
        # int vs Fraction comparison is exact, no floats involved
        return (not self.applicable) or self.edges <= self.bound


def check_erdos_gallai(g: Graph, ell: int) -> ErdosGallaiReport:
    """Edge bound for graphs with no path on ell + 1 vertices:
    e(G) <= (ell - 1) * n / 2."""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    applicable = ell + 1 > g.n or find_path(g, ell + 1) is None
    return ErdosGallaiReport(
        ell=ell,
        applicable=applicable,
        edges=g.m,
        bound=Fraction((ell - 1) * g.n, 2),
    )
