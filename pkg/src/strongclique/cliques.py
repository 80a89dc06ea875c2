"""Exact strong clique number and strong chromatic index.

A strong clique is an edge set pairwise at distance <= 2 in the line
graph (incident, or joined by a third edge).  The solver literally runs
maximum clique on square(line_graph(g)); a second, independent distance
route (BFS between edges) backs the verifier and the brute-force oracle
so the two never share code paths.

max_clique is a Tomita-style branch and bound: greedy colouring upper
bound, candidates processed in colour order, all sets as bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, build_graph, edge_distance, line_graph, square
from .rng import SplitMix64

STRONG_CLIQUE_EDGE_CAP = 64
BRUTE_FORCE_EDGE_CAP = 20
CHROMATIC_EDGE_BUDGET = 24


@dataclass(frozen=True)
class StrongCliqueWitness:
    edge_ids: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.edge_ids)

    def as_edges(self, g: Graph) -> tuple[tuple[int, int], ...]:
        return tuple(g.edges[i] for i in sorted(self.edge_ids))


@dataclass(frozen=True)
class StrongColoring:
    """colors[i] is the colour of edge id i; count is the palette size."""

    colors: tuple[int, ...]
    count: int


def max_clique(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Maximum clique size and one witness (vertex tuple, increasing)."""
    n, adj = g.n, g.adj

    chosen = 0
    for v in range(n):
        if (adj[v] & chosen) == chosen:
            chosen |= 1 << v
    best_size = chosen.bit_count()
    best_mask = chosen

    def colour_order(p: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        ub: list[int] = []
        colour = 0
        uncoloured = p
        while uncoloured:
            colour += 1
            q = uncoloured
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~adj[v]
                q &= q - 1
                uncoloured ^= 1 << v
                order.append(v)
                ub.append(colour)
        return order, ub

    def expand(r_mask: int, r_size: int, p: int) -> None:
        nonlocal best_size, best_mask
        order, ub = colour_order(p)
        for i in range(len(order) - 1, -1, -1):
            if r_size + ub[i] <= best_size:
                return
            v = order[i]
            new_p = p & adj[v]
            if new_p:
                expand(r_mask | (1 << v), r_size + 1, new_p)
            elif r_size + 1 > best_size:
                best_size = r_size + 1
                best_mask = r_mask | (1 << v)
            p &= ~(1 << v)

    expand(0, 0, (1 << n) - 1)
    return best_size, tuple(bits(best_mask))


def strong_adjacency(g: Graph) -> list[int]:
    """Edge-compatibility rows: bit f of row e set iff edges e and f are
    within line-graph distance 2.  Direct formula, no line graph built:
    reach(e) = endpoints of e plus their neighbourhoods; e ~ f iff reach(e)
    touches an endpoint of f."""
    m = g.m
    emask = [g.endpoint_mask(i) for i in range(m)]
    reach = []
    for i in range(m):
        u, v = g.edges[i]
        reach.append(emask[i] | g.adj[u] | g.adj[v])
    rows = [0] * m
    for i in range(m):
        row = 0
        ri = reach[i]
        for j in range(m):
            if j != i and ri & emask[j]:
                row |= 1 << j
        rows[i] = row
    return rows


def is_strong_clique(g: Graph, edge_ids) -> bool:
    """Pairwise line-graph distance <= 2, checked by BFS per pair.

    Deliberately independent from strong_adjacency: this is the verifier
    route for solver output.
    """
    ids = sorted(set(edge_ids))
    for e in ids:
        if not 0 <= e < g.m:
            raise ValueError(f"edge id {e} out of range")
    for a in range(len(ids)):
        for b in range(a + 1, len(ids)):
            d = edge_distance(g, ids[a], ids[b])
            if d is None or d > 2:
                return False
    return True


def strong_clique_number(g: Graph) -> tuple[int, StrongCliqueWitness]:
    """Exact strong clique number with witness.

    Runs max_clique on square(line_graph(g)); needs m <= 64.
    """
    if g.m == 0:
        return 0, StrongCliqueWitness(frozenset())
    if g.m > STRONG_CLIQUE_EDGE_CAP:
        raise ValueError(
            f"strong clique solver capacity is {STRONG_CLIQUE_EDGE_CAP} edges, got {g.m}"
        )
    sq = square(line_graph(g))
    rows = strong_adjacency(g)
    if list(sq.adj) != rows:
        raise AssertionError("edge compatibility routes disagree; implementation bug")
    size, verts = max_clique(sq)
    witness = frozenset(verts)
    for e in witness:
        others = witness - {e}
        for f in others:
            if not (rows[e] >> f) & 1:
                raise AssertionError("solver returned an invalid witness")
    return size, StrongCliqueWitness(witness)


def strong_clique_number_bruteforce(g: Graph) -> int:
    """Independent oracle: include/exclude over edges with the pairwise
    compatibility taken from BFS edge distances.  m <= 20."""
    m = g.m
    if m > BRUTE_FORCE_EDGE_CAP:
        raise ValueError(f"brute force capped at {BRUTE_FORCE_EDGE_CAP} edges, got {m}")
    if m == 0:
        return 0
    compat = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            d = edge_distance(g, i, j)
            if d is not None and d <= 2:
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    best = 0

    def rec(idx: int, chosen_mask: int, count: int) -> None:
        nonlocal best
        if count + (m - idx) <= best:
            return
        if idx == m:
            best = max(best, count)
            return
        if chosen_mask & ~compat[idx] == 0:
            rec(idx + 1, chosen_mask | (1 << idx), count + 1)
        rec(idx + 1, chosen_mask, count)

    rec(0, 0, 0)
    return best


def greedy_strong_clique(g: Graph, seed: int) -> StrongCliqueWitness:
    """Cheap lower bound: shuffle edges with the given seed, keep each edge
    compatible with everything kept so far."""
    rows = strong_adjacency(g)
    order = list(range(g.m))
    SplitMix64(seed).shuffle(order)
    chosen_mask = 0
    chosen = []
    for e in order:
        if chosen_mask & ~rows[e] == 0:
            chosen_mask |= 1 << e
            chosen.append(e)
    return StrongCliqueWitness(frozenset(chosen))


def strong_chromatic_index(
    g: Graph, budget: int = CHROMATIC_EDGE_BUDGET
) -> tuple[int, StrongColoring]:
    """Exact chromatic number of the edge-compatibility graph.

    Iterative deepening from the clique lower bound, DSATUR-style vertex
    selection, max clique precoloured, and at most one fresh colour per
    step.  Edgeless graphs need zero colours.  Raises when m exceeds the
    budget (default 24): runtime is exponential and this is a desk tool.
    """
    m = g.m
    if m == 0:
        return 0, StrongColoring(colors=(), count=0)
    if m > budget:
        raise ValueError(f"strong chromatic index budget is {budget} edges, got {m}")
    rows = strong_adjacency(g)
    sq = build_graph(m, [(i, j) for i in range(m) for j in bits(rows[i]) if i < j])
    omega, clique_verts = max_clique(sq)

    greedy_cols: list[int] = [-1] * m
    for e in range(m):
        used = {greedy_cols[j] for j in bits(rows[e]) if greedy_cols[j] != -1}
        c = 0
        while c in used:
            c += 1
        greedy_cols[e] = c
    upper = max(greedy_cols) + 1

    def solve(k: int) -> list[int] | None:
        colors = [-1] * m
        for idx, e in enumerate(sorted(clique_verts)):
            colors[e] = idx
        uncoloured = (1 << m) - 1
        for e in clique_verts:
            uncoloured ^= 1 << e

        def bt(uncoloured: int, max_used: int) -> bool:
            if not uncoloured:
                return True
            pick = -1
            pick_key = None
            for e in bits(uncoloured):
                neigh = {colors[j] for j in bits(rows[e]) if colors[j] != -1}
                key = (len(neigh), (rows[e] & uncoloured).bit_count(), -e)
                if pick_key is None or key > pick_key:
                    pick_key = key
                    pick = e
            e = pick
            blocked = {colors[j] for j in bits(rows[e]) if colors[j] != -1}
            top = min(max_used + 1, k - 1)
            for c in range(top + 1):
                if c in blocked:
                    continue
                colors[e] = c
                if bt(uncoloured ^ (1 << e), max(max_used, c)):
                    return True
                colors[e] = -1
            return False

        if bt(uncoloured, len(clique_verts) - 1):
            return colors
        return None

    for k in range(omega, upper + 1):
        result = solve(k)
        if result is not None:
            count = max(result) + 1
            for e in range(m):
                for j in bits(rows[e]):
                    if result[e] == result[j]:
                        raise AssertionError("colouring clash; implementation bug")
            return count, StrongColoring(colors=tuple(result), count=count)
    raise AssertionError("greedy upper bound unreachable; implementation bug")
