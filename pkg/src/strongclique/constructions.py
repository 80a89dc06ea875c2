"""Extremal graph families with known strong clique numbers.

Each generator returns (graph, spec) where spec records the parameters
and the expected exact values, so tests and the hunt can treat the
family as a floor.  Labelling is deterministic: core vertices (cycle
classes, clique, bipartition sides) come first, pendants last.

In all four families every pair of edges is within line-graph distance
two, so the strong clique number equals the edge count; the expected
values below are written in the closed forms the bounds take.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import MAX_VERTICES, Graph, build_graph

FAMILIES = ("blown_up_c5", "hairy_clique", "complete_bipartite", "bip_pendant")


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    parameters: dict[str, int] = field(compare=False)
    expected_strong_clique: int
    expected_max_degree: int


def blown_up_c5(t: int) -> tuple[Graph, ConstructionSpec]:
    """Five stable classes of size t, consecutive classes completely
    joined.  Triangle-free, max degree 2t, strong clique number 5t^2."""
    if t < 1:
        raise ValueError("blow-up factor must be at least 1")
    n = 5 * t
    if n > MAX_VERTICES:
        raise ValueError(f"blown up C5 with t={t} needs {n} vertices, cap is {MAX_VERTICES}")
    pairs = []
    for c in range(5):
        d = (c + 1) % 5
        for i in range(t):
            for j in range(t):
                pairs.append((c * t + i, d * t + j))
    g = build_graph(n, pairs)
    spec = ConstructionSpec(
        family="blown_up_c5",
        parameters={"t": t},
        expected_strong_clique=5 * t * t,
        expected_max_degree=2 * t,
    )
    return g, spec


def hairy_clique(q: int, delta: int) -> tuple[Graph, ConstructionSpec]:
    """Clique on q vertices with delta - q + 1 pendant edges hanging off
    every clique vertex.  No cycle longer than q at all, so in particular
    it avoids every cycle length above q.

    Strong clique number is the full edge count
    q * (delta - q + 1) + q * (q - 1) / 2; for odd q = 2k - 1 this is the
    (2k - 1) * (delta - k + 1) shape the even-cycle bounds are tight on.
    """
    if q < 3:
        raise ValueError("clique order must be at least 3")
    if delta < q - 1:
        raise ValueError(f"max degree {delta} below clique degree {q - 1}")
    pendants = delta - q + 1
    n = q + q * pendants
    if n > MAX_VERTICES:
        raise ValueError(f"hairy clique q={q}, delta={delta} needs {n} vertices")
    pairs = [(u, v) for u in range(q) for v in range(u + 1, q)]
    leaf = q
    for v in range(q):
        for _ in range(pendants):
            pairs.append((v, leaf))
            leaf += 1
    g = build_graph(n, pairs)
    parameters = {"q": q, "delta": delta}
    if q % 2 == 1:
        parameters["k"] = (q + 1) // 2
    spec = ConstructionSpec(
        family="hairy_clique",
        parameters=parameters,
        expected_strong_clique=q * pendants + q * (q - 1) // 2,
        expected_max_degree=delta,
    )
    return g, spec


def complete_bipartite(a: int, b: int) -> tuple[Graph, ConstructionSpec]:
    """K_{a,b}.  Any two disjoint edges are joined by a crossing edge, so
    the strong clique number is a * b (Delta^2 when a = b)."""
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    n = a + b
    if n > MAX_VERTICES:
        raise ValueError(f"complete bipartite {a}+{b} exceeds {MAX_VERTICES} vertices")
    if a * b > MAX_VERTICES:
        raise ValueError(
            f"complete bipartite {a}x{b} has {a * b} edges, solver cap is {MAX_VERTICES}"
        )
    pairs = [(u, a + v) for u in range(a) for v in range(b)]
    g = build_graph(n, pairs)
    spec = ConstructionSpec(
        family="complete_bipartite",
        parameters={"a": a, "b": b},
        expected_strong_clique=a * b,
        expected_max_degree=max(a, b),
    )
    return g, spec


def bip_pendant_construction(k: int, delta: int) -> tuple[Graph, ConstructionSpec]:
    """K_{k-1, delta} plus delta - k + 1 pendant edges on one vertex of the
    size-delta side.  Bipartite, max degree delta, and no cycle is longer
    than 2(k - 1), so every C_{2j} with j >= k is absent.

    Strong clique number is the edge count k * (delta - 1) + 1.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if delta < k - 1:
        raise ValueError(f"max degree {delta} below left-side degree {k - 1}")
    small, large = k - 1, delta
    pendants = delta - k + 1
    n = small + large + pendants
    if n > MAX_VERTICES:
        raise ValueError(f"bip pendant k={k}, delta={delta} needs {n} vertices")
    pairs = [(u, small + v) for u in range(small) for v in range(large)]
    host = small  # first vertex of the large side carries the pendants
    leaf = small + large
    for _ in range(pendants):
        pairs.append((host, leaf))
        leaf += 1
    g = build_graph(n, pairs)
    spec = ConstructionSpec(
        family="bip_pendant",
        parameters={"k": k, "delta": delta},
        expected_strong_clique=k * (delta - 1) + 1,
        expected_max_degree=delta,
    )
    return g, spec


def make_construction(family: str, parameters: dict[str, int]) -> tuple[Graph, ConstructionSpec]:
    """Dispatch by family name (CLI entry point)."""
    try:
        builder = {
            "blown_up_c5": lambda p: blown_up_c5(p["t"]),
            "hairy_clique": lambda p: hairy_clique(p["q"], p["delta"]),
            "complete_bipartite": lambda p: complete_bipartite(p["a"], p["b"]),
            "bip_pendant": lambda p: bip_pendant_construction(p["k"], p["delta"]),
        }[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    try:
        return builder(parameters)
    except KeyError as missing:
        raise ValueError(f"family {family} needs parameter {missing}") from None
