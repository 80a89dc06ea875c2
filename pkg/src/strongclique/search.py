"""Exhaustive enumeration, the bound-verification sweep, and the
randomized counterexample hunt.

Canonical form: the lexicographically smallest upper-triangle bit string
(column-major, same orientation as graph6) over vertex orders that list
degrees nonincreasing.  That is a complete isomorphism invariant: any
isomorphism maps degree-sorted orders onto degree-sorted orders with
identical strings, and the key decodes back to a graph isomorphic to the
input.  (It is not the same value as the minimum over all n! orders,
which tests cross-check by class counts instead of raw keys.)  The DFS
explores candidate vertices column by column, prunes against the best
known value, and skips twin vertices (same neighbourhood outside the
pair), which is what keeps near-regular graphs cheap.

Enumeration goes level by level: children of each (n-1)-vertex class are
all 2^(n-1) attachments of a new last vertex, deduplicated by canonical
key.  Representatives are the canonically labelled graphs themselves,
yielded in increasing key order, so the stream is reproducible
bit-for-bit.

The hunt is steepest-ascent hill climbing on single edge toggles with
seeded restarts and a greedy screen; the exact solver only runs when the
screen gets within 2 of the bound, on every restart's initial state, and
on final candidates.  All randomness comes from SplitMix64, so a config
is a complete replay token.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .bounds import (
    DEFAULT_K_MAX,
    BoundInstance,
    check_bound,
    check_witness_edge_bound,
    exact_bound,
    find_spec,
    theorem_registry,
)
from .cliques import greedy_strong_clique, strong_chromatic_index, strong_clique_number
from .cycles import cycle_profile, has_path_between
from .graph import (
    MAX_VERTICES,
    Graph,
    bipartition,
    bits,
    build_graph,
    max_degree,
    ore_degree,
)
from .graph6 import format_graph6, parse_graph6
from .rng import SplitMix64

# --- canonical labelling ---

_canon_cache: dict[tuple[int, tuple[int, ...]], int] = {}


def canonical_key(g: Graph, cache: bool = True) -> int:
    """Packed upper-triangle bits of the canonical labelling."""
    n = g.n
    if n == 1:
        return 0
    if cache:
        memo_key = (n, g.adj)
        hit = _canon_cache.get(memo_key)
        if hit is not None:
            return hit
    adj = g.adj
    degs = [a.bit_count() for a in adj]
    target = sorted(degs, reverse=True)
    total_bits = n * (n - 1) // 2
    tri = [d * (d - 1) // 2 for d in range(n + 1)]
    best: int | None = None

    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(degs[v], []).append(v)

    def dfs(depth: int, used: int, placed: list[int], value: int) -> None:
        nonlocal best
        if depth == n:
            if best is None or value < best:
                best = value
            return
        cols: dict[int, list[int]] = {}
        for v in by_degree[target[depth]]:
            if (used >> v) & 1:
                continue
            av = adj[v]
            c = 0
            for u in placed:
                c = (c << 1) | ((av >> u) & 1)
            cols.setdefault(c, []).append(v)
        for c in sorted(cols):
            new_value = (value << depth) | c
            if best is not None:
                prefix = best >> (total_bits - tri[depth + 1])
                if new_value > prefix:
                    break
            reps: list[int] = []
            for v in cols[c]:
                twin = False
                for u in reps:
                    if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                        twin = True
                        break
                if twin:
                    continue
                reps.append(v)
                placed.append(v)
                dfs(depth + 1, used | (1 << v), placed, new_value)
                placed.pop()

    dfs(0, 0, [], 0)
    assert best is not None
    if cache:
        _canon_cache[memo_key] = best
    return best


def graph_from_key(n: int, key: int) -> Graph:
    """Inverse of canonical_key's packing (column-major upper triangle,
    MSB first)."""
    total_bits = n * (n - 1) // 2
    pairs = []
    pos = total_bits - 1
    for j in range(1, n):
        for i in range(j):
            if (key >> pos) & 1:
                pairs.append((i, j))
            pos -= 1
    return build_graph(n, pairs)


def canonical_form(g: Graph) -> Graph:
    """The canonically labelled copy of g."""
    return graph_from_key(g.n, canonical_key(g))


def enumerate_graphs(n: int) -> list[Graph]:
    """All isomorphism classes on exactly n vertices (isolated vertices
    included), canonically labelled, in increasing canonical-key order.

    Counts for n = 1..8: 1, 2, 4, 11, 34, 156, 1044, 12346.  Level n is
    built from level n-1 by attaching one new vertex every possible way.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} out of range")
    reps = [build_graph(1, [])]
    for m in range(2, n + 1):
        seen: set[int] = set()
        last = m - 1
        for parent in reps:
            base_edges = list(parent.edges)
            for nb in range(1 << (m - 1)):
                child = build_graph(
                    m, base_edges + [(i, last) for i in bits(nb)]
                )
                seen.add(canonical_key(child, cache=False))
        reps = [graph_from_key(m, key) for key in sorted(seen)]
    return reps


# --- sweep ---


@dataclass
class SweepReport:
    graphs: int = 0
    skipped: list[dict] = field(default_factory=list)
    per_spec: dict[str, dict] = field(default_factory=dict)
    theorem_violations: list[dict] = field(default_factory=list)
    conjecture_counterexamples: list[dict] = field(default_factory=list)
    tight_examples: dict[str, list[str]] = field(default_factory=dict)
    chi_computed: int = 0
    chi_skipped: int = 0

    @property
    def sound(self) -> bool:
        return not self.theorem_violations

    def as_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "skipped": self.skipped,
            "per_spec": self.per_spec,
            "theorem_violations": self.theorem_violations,
            "conjecture_counterexamples": self.conjecture_counterexamples,
            "tight_examples": self.tight_examples,
            "chi_computed": self.chi_computed,
            "chi_skipped": self.chi_skipped,
            "sound": self.sound,
        }


def graph_record(
    g6: str,
    k_max: int = DEFAULT_K_MAX,
    include_chi: bool = False,
    chi_budget: int = 24,
) -> dict:
    """One sweep record: invariants, profile, and every applicable bound
    check, as a JSON-ready dict.  No timestamps, no floats."""
    g = parse_graph6(g6)
    rec: dict = {
        "schema": 1,
        "graph6": format_graph6(g),
        "n": g.n,
        "m": g.m,
        "delta": max_degree(g),
        "sigma": ore_degree(g) if g.m else None,
    }
    profile = cycle_profile(g, k_max=k_max)
    rec["profile"] = {
        "girth": profile.girth,
        "cycles": list(profile.cycle_lengths()),
        "longest_path": profile.longest_path_order(),
    }
    if g.m > MAX_VERTICES:
        rec["skip_reason"] = f"edge count {g.m} exceeds solver capacity {MAX_VERTICES}"
        return rec
    omega, witness = strong_clique_number(g)
    rec["omega2"] = omega
    rec["witness"] = sorted(witness.edge_ids)
    chi: int | None = None
    if include_chi:
        if g.m <= chi_budget:
            chi, _ = strong_chromatic_index(g, chi_budget)
            rec["chi2"] = chi
        else:
            rec["chi2_budget_exceeded"] = True
    checks = []
    for inst in theorem_registry(k_max):
        value = omega if inst.spec.target == "omega2" else chi
        if value is None:
            continue
        c = check_bound(g, inst, value, profile=profile, k_max=k_max)
        if not c.applicable:
            continue
        checks.append(
            {
                "spec": c.spec_id,
                "params": c.params,
                "applicable": True,
                "bound": c.bound_value,
                "holds": c.holds,
                "tight": c.tight,
            }
        )
    l8 = check_witness_edge_bound(g, witness.edge_ids)
    if l8.applicable:
        checks.append(
            {
                "spec": "L8",
                "params": {},
                "applicable": True,
                "bound": l8.bound_value,
                "holds": l8.holds,
                "tight": l8.tight,
            }
        )
    rec["checks"] = checks
    return rec


def _record_args(args: tuple) -> dict:
    return graph_record(*args)


def sweep(
    graphs: Iterable[Graph | str],
    k_max: int = DEFAULT_K_MAX,
    include_chi: bool = False,
    chi_budget: int = 24,
    tight_cap: int = 100,
    workers: int = 1,
    record_sink: Callable[[dict], None] | None = None,
) -> SweepReport:
    """Evaluate every registry entry on every graph.

    Accepts Graph values or graph6 strings.  Records stream to
    record_sink in input order; the returned report aggregates.  Theorem
    violations make report.sound false (they are implementation bugs);
    conjecture violations are collected as candidate counterexamples.
    """
    lines = [g if isinstance(g, str) else format_graph6(g) for g in graphs]
    report = SweepReport()
    labels = [inst.label for inst in theorem_registry(k_max)] + ["L8"]
    for label in labels:
        report.per_spec[label] = {
            "applicable": 0,
            "holds": 0,
            "tight": 0,
            "violations": 0,
        }
    conj_ids = {
        inst.spec.spec_id
        for inst in theorem_registry(k_max)
        if inst.spec.kind == "conjecture"
    }

    args = [(line, k_max, include_chi, chi_budget) for line in lines]
    if workers > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            records = list(
                pool.imap(_record_args, args, chunksize=max(1, len(args) // (workers * 8)))
            )
    else:
        records = [graph_record(*a) for a in args]

    for rec in records:
        report.graphs += 1
        if record_sink is not None:
            record_sink(rec)
        if "skip_reason" in rec:
            report.skipped.append({"graph6": rec["graph6"], "reason": rec["skip_reason"]})
            continue
        if include_chi:
            if "chi2" in rec:
                report.chi_computed += 1
            elif rec.get("chi2_budget_exceeded"):
                report.chi_skipped += 1
        for c in rec["checks"]:
            label = c["spec"]
            if c["params"]:
                inner = ",".join(f"{k}={v}" for k, v in sorted(c["params"].items()))
                label = f"{c['spec']}[{inner}]"
            panel = report.per_spec[label]
            panel["applicable"] += 1
            if c["holds"]:
                panel["holds"] += 1
            if c["tight"]:
                panel["tight"] += 1
                bucket = report.tight_examples.setdefault(label, [])
                if len(bucket) < tight_cap:
                    bucket.append(rec["graph6"])
            if not c["holds"]:
                panel["violations"] += 1
                entry = {
                    "spec": c["spec"],
                    "params": c["params"],
                    "graph6": rec["graph6"],
                    "value": rec["omega2"] if c["spec"] != "L8" else len(rec["witness"]),
                    "bound": c["bound"],
                    "witness": rec["witness"],
                }
                if c["spec"] in conj_ids:
                    report.conjecture_counterexamples.append(entry)
                else:
                    report.theorem_violations.append(entry)
    return report


def serialize_record(rec: dict) -> str:
    return json.dumps(rec, sort_keys=True, separators=(",", ":"))


# --- hunt ---


@dataclass(frozen=True)
class HuntConfig:
    target: str = "CONJ4"
    k: int | None = 2
    n: int = 10
    delta_cap: int = 5
    seed: int = 0
    max_steps: int = 1000  # per restart
    restarts: int = 4
    sideways_limit: int = 20
    bipartite: bool | None = None  # None: take it from the target spec
    forbidden_cycles: tuple[int, ...] | None = None  # None: from the target spec
    initial: Graph | None = None


@dataclass
class HuntResult:
    target_label: str
    best_graph6: str
    best_omega2: int
    best_witness: tuple[int, ...]
    best_delta: int
    effective_delta: int
    bound_value: int
    gap: int
    steps: int
    restarts: int
    greedy_evals: int
    exact_evals: int
    config: dict

    def as_dict(self) -> dict:
        return {
            "target": self.target_label,
            "best": {
                "graph6": self.best_graph6,
                "omega2": self.best_omega2,
                "witness": list(self.best_witness),
                "delta": self.best_delta,
                "effective_delta": self.effective_delta,
                "bound": self.bound_value,
                "gap": self.gap,
            },
            "steps": self.steps,
            "restarts": self.restarts,
            "greedy_evals": self.greedy_evals,
            "exact_evals": self.exact_evals,
            "config": self.config,
        }


def _resolve_target(config: HuntConfig) -> tuple[BoundInstance, tuple[int, ...], bool, int]:
    spec = find_spec(config.target)
    if spec.target != "omega2":
        raise ValueError(
            f"hunt target {spec.spec_id} bounds the strong chromatic index; "
            "only strong-clique targets are supported"
        )
    if spec.uses_sigma:
        raise ValueError(f"hunt target {spec.spec_id} is ore-degree based; unsupported")
    if spec.forbidden_path_order({} if spec.param is None else {spec.param: config.k}) is not None:
        raise ValueError(f"hunt target {spec.spec_id} forbids paths; unsupported")
    params: dict = {}
    if spec.param is not None:
        if config.k is None:
            raise ValueError(f"target {spec.spec_id} needs parameter {spec.param}")
        if config.k < spec.param_lo:
            raise ValueError(f"parameter {spec.param}={config.k} below minimum {spec.param_lo}")
        params = {spec.param: config.k}
    inst = BoundInstance(spec=spec, params=params)
    forbidden = (
        config.forbidden_cycles
        if config.forbidden_cycles is not None
        else spec.forbidden_cycles(params)
    )
    for length in forbidden:
        if length < 3:
            raise ValueError(f"forbidden cycle length {length} below 3")
    want_bipartite = (
        config.bipartite if config.bipartite is not None else spec.requires_bipartite
    )
    floor = max(1, spec.min_delta(params))
    return inst, tuple(forbidden), want_bipartite, floor


def _bound_floor(inst: BoundInstance, delta: int, min_delta: int) -> int:
    eff = max(delta, min_delta)
    exact = exact_bound(inst, eff)
    return eff, exact.numerator // exact.denominator


def _legal_add(
    g: Graph,
    u: int,
    v: int,
    delta_cap: int,
    forbidden: tuple[int, ...],
    want_bipartite: bool,
    colour: list[int] | None,
    comp: list[int] | None,
) -> bool:
    if g.degree(u) >= delta_cap or g.degree(v) >= delta_cap:
        return False
    if want_bipartite and comp is not None and comp[u] == comp[v] and colour[u] == colour[v]:
        return False
    for length in forbidden:
        if has_path_between(g, u, v, length):
            return False
    return True


def _colouring(g: Graph) -> tuple[list[int], list[int]]:
    """(colour, component) arrays; caller guarantees g is bipartite."""
    colour = [-1] * g.n
    comp = [-1] * g.n
    c = 0
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        comp[s] = c
        stack = [s]
        while stack:
            x = stack.pop()
            for y in bits(g.adj[x]):
                if colour[y] == -1:
                    colour[y] = colour[x] ^ 1
                    comp[y] = c
                    stack.append(y)
        c += 1
    return colour, comp


def _random_start(
    rng: SplitMix64,
    n: int,
    delta_cap: int,
    forbidden: tuple[int, ...],
    want_bipartite: bool,
) -> Graph:
    g = build_graph(n, [])
    for _ in range(2 * n):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        u, v = min(u, v), max(u, v)
        if g.has_edge(u, v):
            continue
        colour, comp = _colouring(g) if want_bipartite else (None, None)
        if _legal_add(g, u, v, delta_cap, forbidden, want_bipartite, colour, comp):
            g = build_graph(n, list(g.edges) + [(u, v)])
    return g


def hunt(config: HuntConfig) -> HuntResult:
    """Seeded hill-climbing search for violations of one registry entry.

    Objective: omega2(g) - bound(max(Delta(g), min_delta)).  Evaluating the
    bound at the entry's minimum degree floor cannot produce a false
    positive (the formulas are nondecreasing in Delta) and keeps the
    climb from wandering below the stated sharpness range.  Gap > 0 on
    the result is a genuine counterexample.
    """
    if config.n < 2 or config.n > MAX_VERTICES:
        raise ValueError(f"hunt vertex count {config.n} out of range")
    if not 1 <= config.delta_cap <= config.n - 1:
        raise ValueError(f"delta cap {config.delta_cap} out of range 1..{config.n - 1}")
    if config.max_steps < 0 or config.restarts < 1:
        raise ValueError("max_steps must be >= 0 and restarts >= 1")
    inst, forbidden, want_bipartite, min_delta = _resolve_target(config)

    if config.initial is not None:
        g0 = config.initial
        if g0.n != config.n:
            raise ValueError(f"initial state has {g0.n} vertices, config says {config.n}")
        if max_degree(g0) > config.delta_cap:
            raise ValueError("initial state exceeds the degree cap")
        if want_bipartite and bipartition(g0) is None:
            raise ValueError("initial state must be bipartite for this target")
        profile = cycle_profile(g0, max_len=max(forbidden, default=3))
        for length in forbidden:
            if not profile.cycle_free(length):
                raise ValueError(f"initial state contains a forbidden {length}-cycle")

    greedy_evals = 0
    exact_evals = 0
    steps_total = 0
    screen_seed = SplitMix64(config.seed).next64()

    def screen(g: Graph) -> int:
        nonlocal greedy_evals
        greedy_evals += 1
        return greedy_strong_clique(g, screen_seed).size

    best: dict | None = None

    def exact_eval(g: Graph) -> None:
        nonlocal exact_evals, best
        exact_evals += 1
        omega, witness = strong_clique_number(g)
        delta = max_degree(g)
        eff, floor_value = _bound_floor(inst, delta, min_delta)
        gap = omega - floor_value
        key = (gap, -g.m)
        if best is None or key > best["key"]:
            best = {
                "key": key,
                "gap": gap,
                "graph6": format_graph6(g),
                "omega2": omega,
                "witness": tuple(sorted(witness.edge_ids)),
                "delta": delta,
                "eff": eff,
                "bound": floor_value,
            }

    for restart in range(config.restarts):
        rng = SplitMix64(config.seed + restart)
        if restart == 0 and config.initial is not None:
            g = config.initial
        else:
            g = _random_start(rng, config.n, config.delta_cap, forbidden, want_bipartite)
        exact_eval(g)
        cur_screen = screen(g)
        eff, bound_floor = _bound_floor(inst, max_degree(g), min_delta)
        sideways = 0
        for _ in range(config.max_steps):
            colour, comp = _colouring(g) if want_bipartite else (None, None)
            candidates: list[tuple[int, Graph]] = []
            best_score = None
            for u in range(config.n):
                for v in range(u + 1, config.n):
                    if g.has_edge(u, v):
                        h = build_graph(g.n, [e for e in g.edges if e != (u, v)])
                    elif _legal_add(
                        g, u, v, config.delta_cap, forbidden, want_bipartite, colour, comp
                    ):
                        h = build_graph(g.n, list(g.edges) + [(u, v)])
                    else:
                        continue
                    _, h_floor = _bound_floor(inst, max_degree(h), min_delta)
                    score = screen(h) - h_floor
                    if best_score is None or score > best_score:
                        best_score = score
                        candidates = [(score, h)]
                    elif score == best_score:
                        candidates.append((score, h))
            if best_score is None:
                break
            cur_gap = cur_screen - bound_floor
            if best_score < cur_gap:
                break
            if best_score == cur_gap:
                sideways += 1
                if sideways > config.sideways_limit:
                    break
            else:
                sideways = 0
            _, g = candidates[rng.randrange(len(candidates))]
            steps_total += 1
            cur_screen = screen(g)
            eff, bound_floor = _bound_floor(inst, max_degree(g), min_delta)
            if cur_screen >= bound_floor - 2:
                exact_eval(g)
        exact_eval(g)

    assert best is not None
    return HuntResult(
        target_label=inst.label,
        best_graph6=best["graph6"],
        best_omega2=best["omega2"],
        best_witness=best["witness"],
        best_delta=best["delta"],
        effective_delta=best["eff"],
        bound_value=best["bound"],
        gap=best["gap"],
        steps=steps_total,
        restarts=config.restarts,
        greedy_evals=greedy_evals,
        exact_evals=exact_evals,
        config={
            "target": config.target,
            "k": config.k,
            "n": config.n,
            "delta_cap": config.delta_cap,
            "seed": config.seed,
            "max_steps": config.max_steps,
            "restarts": config.restarts,
            "sideways_limit": config.sideways_limit,
            "bipartite": want_bipartite,
            "forbidden_cycles": list(forbidden),
        },
    )
