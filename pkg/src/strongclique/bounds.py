"""Registry of proven and conjectured bounds on the strong clique number
(and two conjectured bounds on the strong chromatic index), each gated by
a hypothesis on forbidden cycle lengths, forbidden path orders,
bipartiteness, and a minimum max-degree.

All comparisons are exact: fractional bounds (the 5/4 and the square/4
shapes) are Fractions, integers otherwise, never floats.

Conjectured entries carry the Delta range on which they are stated to be
sharp as their min_delta gate; below that range tiny dense graphs (C5,
K4, K6) violate the raw formulas, which says nothing about the
conjectures themselves.  A violation of a theorem entry is an
implementation bug by definition; a violation of a conjecture entry is a
publishable counterexample and gets persisted, not raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .graph import Graph, bipartition, max_degree, ore_degree, ore_degree_of_subgraph
from .cycles import CycleProfile, contains_cycle, cycle_profile

DEFAULT_K_MAX = 5

Params = dict


@dataclass(frozen=True)
class BoundSpec:
    spec_id: str
    kind: str  # "theorem" or "conjecture"
    target: str  # "omega2" or "chi2"
    statement: str
    param: str | None = None
    param_lo: int = 0
    param_hi: Callable[[int], int] | None = field(default=None, compare=False)
    forbidden_cycles: Callable[[Params], tuple[int, ...]] = field(
        default=lambda p: (), compare=False
    )
    requires_bipartite: bool = False
    min_delta: Callable[[Params], int] = field(default=lambda p: 1, compare=False)
    forbidden_path_order: Callable[[Params], int | None] = field(
        default=lambda p: None, compare=False
    )
    bound: Callable[[int, int | None, Params], Fraction] = field(
        default=lambda d, s, p: Fraction(0), compare=False
    )
    uses_sigma: bool = False


@dataclass(frozen=True)
class BoundInstance:
    spec: BoundSpec
    params: dict

    @property
    def label(self) -> str:
        if not self.params:
            return self.spec.spec_id
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.spec.spec_id}[{inner}]"


@dataclass(frozen=True)
class BoundCheck:
    spec_id: str
    params: dict
    applicable: bool
    value: int | None
    bound_value: int | None
    holds: bool
    tight: bool


def _f(x: int) -> Fraction:
    return Fraction(x)


_SPECS: tuple[BoundSpec, ...] = (
    BoundSpec(
        spec_id="T2.1",
        kind="theorem",
        target="omega2",
        statement="triangle-free: 4*omega2 <= 5*Delta^2",
        bound=lambda d, s, p: Fraction(5 * d * d, 4),
        forbidden_cycles=lambda p: (3,),
    ),
    BoundSpec(
        spec_id="T2.2",
        kind="theorem",
        target="omega2",
        statement="C5-free: omega2 <= Delta^2",
        bound=lambda d, s, p: _f(d * d),
        forbidden_cycles=lambda p: (5,),
    ),
    BoundSpec(
        spec_id="T2.3",
        kind="theorem",
        target="omega2",
        statement="C_{2k+1}-free, Delta >= 3k^2+10k: omega2 <= Delta^2",
        param="k",
        param_lo=3,
        param_hi=lambda k_max: k_max,
        bound=lambda d, s, p: _f(d * d),
        forbidden_cycles=lambda p: (2 * p["k"] + 1,),
        min_delta=lambda p: 3 * p["k"] * p["k"] + 10 * p["k"],
    ),
    BoundSpec(
        spec_id="T3.1",
        kind="theorem",
        target="omega2",
        statement="C4-free, Delta >= 4: omega2 <= 3*(Delta-1)",
        bound=lambda d, s, p: _f(3 * (d - 1)),
        forbidden_cycles=lambda p: (4,),
        min_delta=lambda p: 4,
    ),
    BoundSpec(
        spec_id="T3.2",
        kind="theorem",
        target="omega2",
        statement="C_{2k}-free: omega2 <= 10*k^2*(Delta-1)",
        param="k",
        param_lo=3,
        param_hi=lambda k_max: k_max,
        bound=lambda d, s, p: _f(10 * p["k"] * p["k"] * (d - 1)),
        forbidden_cycles=lambda p: (2 * p["k"],),
        # the (Delta-1) factor vanishes on matchings, where one edge is
        # still a strong clique; the bound needs Delta >= 2 to say anything
        min_delta=lambda p: 2,
    ),
    BoundSpec(
        spec_id="T3.3",
        kind="theorem",
        target="omega2",
        statement="{C_{2k},C_{2k+1},C_{2k+2}}-free: omega2 <= (2k-1)*(Delta-1)+2",
        param="k",
        param_lo=2,
        param_hi=lambda k_max: k_max,
        bound=lambda d, s, p: _f((2 * p["k"] - 1) * (d - 1) + 2),
        forbidden_cycles=lambda p: (2 * p["k"], 2 * p["k"] + 1, 2 * p["k"] + 2),
    ),
    BoundSpec(
        spec_id="T5.1",
        kind="theorem",
        target="omega2",
        statement="P_{kappa+1}-free: omega2 <= (kappa-2)*(Delta-1)+2",
        param="kappa",
        param_lo=3,
        param_hi=lambda k_max: 2 * k_max + 1,
        bound=lambda d, s, p: _f((p["kappa"] - 2) * (d - 1) + 2),
        forbidden_path_order=lambda p: p["kappa"] + 1,
    ),
    BoundSpec(
        spec_id="T5.2",
        kind="theorem",
        target="omega2",
        statement="{C_{l-1},C_l,C_{l+1}}-free: omega2 <= (l-2)*(Delta-1)+2",
        param="ell",
        param_lo=5,
        param_hi=lambda k_max: 2 * k_max + 1,
        bound=lambda d, s, p: _f((p["ell"] - 2) * (d - 1) + 2),
        forbidden_cycles=lambda p: (p["ell"] - 1, p["ell"], p["ell"] + 1),
    ),
    BoundSpec(
        spec_id="T7",
        kind="theorem",
        target="omega2",
        statement="C5-free: 4*omega2 <= sigma^2 (sigma the ore degree)",
        bound=lambda d, s, p: Fraction(s * s, 4),
        forbidden_cycles=lambda p: (5,),
        uses_sigma=True,
    ),
    BoundSpec(
        spec_id="T9",
        kind="theorem",
        target="omega2",
        statement="{C3,C5,C_{2k},C_{2k+2}}-free: omega2 <= max(k*Delta, 2k(k-1))",
        param="k",
        param_lo=2,
        param_hi=lambda k_max: k_max,
        bound=lambda d, s, p: _f(max(p["k"] * d, 2 * p["k"] * (p["k"] - 1))),
        forbidden_cycles=lambda p: (3, 5, 2 * p["k"], 2 * p["k"] + 2),
    ),
    BoundSpec(
        spec_id="T13",
        kind="theorem",
        target="omega2",
        statement="bipartite {C_{2k},C_{2k+2}}-free: omega2 <= max(k*Delta, 2k(k-1))",
        param="k",
        param_lo=2,
        param_hi=lambda k_max: k_max,
        bound=lambda d, s, p: _f(max(p["k"] * d, 2 * p["k"] * (p["k"] - 1))),
        forbidden_cycles=lambda p: (2 * p["k"], 2 * p["k"] + 2),
        requires_bipartite=True,
    ),
    BoundSpec(
        spec_id="CONJ1",
        kind="conjecture",
        target="chi2",
        statement="4*chi2 <= 5*Delta^2",
        bound=lambda d, s, p: Fraction(5 * d * d, 4),
    ),
    BoundSpec(
        spec_id="CONJ3",
        kind="conjecture",
        target="chi2",
        statement="C5-free: chi2 <= Delta^2",
        bound=lambda d, s, p: _f(d * d),
        forbidden_cycles=lambda p: (5,),
    ),
    BoundSpec(
        spec_id="CONJ4",
        kind="conjecture",
        target="omega2",
        statement="C_{2k}-free (sharp range Delta >= 2k-2): omega2 <= (2k-1)*(Delta-k+1)",
        param="k",
        param_lo=2,
        param_hi=lambda k_max: k_max,
        bound=lambda d, s, p: _f((2 * p["k"] - 1) * (d - p["k"] + 1)),
        forbidden_cycles=lambda p: (2 * p["k"],),
        min_delta=lambda p: max(4, 2 * p["k"] - 2),
    ),
    BoundSpec(
        spec_id="CONJ5",
        kind="conjecture",
        target="omega2",
        statement="bipartite C_{2k}-free (sharp range Delta >= k-1): omega2 <= k*(Delta-1)+1",
        param="k",
        param_lo=2,
        param_hi=lambda k_max: k_max,
        bound=lambda d, s, p: _f(p["k"] * (d - 1) + 1),
        forbidden_cycles=lambda p: (2 * p["k"],),
        requires_bipartite=True,
        min_delta=lambda p: max(1, p["k"] - 1),
    ),
)


def theorem_registry(k_max: int = DEFAULT_K_MAX) -> tuple[BoundInstance, ...]:
    """Every registered bound, parametrized entries instantiated for their
    parameter range up to k_max (cycle windows stay within 2*k_max + 2)."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    out: list[BoundInstance] = []
    for spec in _SPECS:
        if spec.param is None:
            out.append(BoundInstance(spec=spec, params={}))
        else:
            hi = spec.param_hi(k_max)
            for value in range(spec.param_lo, hi + 1):
                out.append(BoundInstance(spec=spec, params={spec.param: value}))
    return tuple(out)


def find_spec(spec_id: str) -> BoundSpec:
    for spec in _SPECS:
        if spec.spec_id == spec_id:
            return spec
    raise ValueError(f"unknown bound id {spec_id!r}")


def hypothesis_satisfied(
    g: Graph,
    instance: BoundInstance,
    profile: CycleProfile | None = None,
    k_max: int = DEFAULT_K_MAX,
) -> bool:
    spec, params = instance.spec, instance.params
    if max_degree(g) < max(1, spec.min_delta(params)):
        return False
    if spec.requires_bipartite and bipartition(g) is None:
        return False
    if profile is None:
        profile = cycle_profile(g, k_max=k_max)
    for length in spec.forbidden_cycles(params):
        if not profile.cycle_free(length):
            return False
    order = spec.forbidden_path_order(params)
    if order is not None and not profile.path_free(order):
        return False
    return True


def applicable_bounds(
    g: Graph, k_max: int = DEFAULT_K_MAX, profile: CycleProfile | None = None
) -> tuple[BoundInstance, ...]:
    """Registry entries whose hypotheses g satisfies."""
    if profile is None:
        profile = cycle_profile(g, k_max=k_max)
    return tuple(
        inst
        for inst in theorem_registry(k_max)
        if hypothesis_satisfied(g, inst, profile=profile, k_max=k_max)
    )


def exact_bound(instance: BoundInstance, delta: int, sigma: int | None = None) -> Fraction:
    """The bound's exact value at the given max degree (and ore degree for
    the sigma-based entry)."""
    if instance.spec.uses_sigma:
        if sigma is None:
            raise ValueError(f"{instance.spec.spec_id} needs the ore degree")
        return instance.spec.bound(delta, sigma, instance.params)
    return instance.spec.bound(delta, None, instance.params)


def check_bound(
    g: Graph,
    instance: BoundInstance,
    value: int,
    profile: CycleProfile | None = None,
    k_max: int = DEFAULT_K_MAX,
) -> BoundCheck:
    """Evaluate one registry entry against the exact invariant value
    (strong clique number, or strong chromatic index for chi2 entries)."""
    applicable = hypothesis_satisfied(g, instance, profile=profile, k_max=k_max)
    if not applicable:
        return BoundCheck(
            spec_id=instance.spec.spec_id,
            params=dict(instance.params),
            applicable=False,
            value=value,
            bound_value=None,
            holds=True,
            tight=False,
        )
    sigma = ore_degree(g) if instance.spec.uses_sigma else None
    exact = exact_bound(instance, max_degree(g), sigma)
    return BoundCheck(
        spec_id=instance.spec.spec_id,
        params=dict(instance.params),
        applicable=True,
        value=value,
        bound_value=exact.numerator // exact.denominator,
        holds=value <= exact,
        tight=value == exact,
    )


def check_witness_edge_bound(g: Graph, witness_edge_ids) -> BoundCheck:
    """Diagnostic on a maximum-size witness H in a C5-free graph:
    e(H) <= Delta_H * (sigma_G(H) - Delta_H), degrees of H's own subgraph
    against ore degree measured in the host.  Skipped for empty witnesses.
    Proven, so a failure is build-breaking like any theorem entry."""
    ids = sorted(set(witness_edge_ids))
    c5_free = g.n < 5 or not contains_cycle(g, 5)
    if not ids or not c5_free:
        return BoundCheck(
            spec_id="L8",
            params={},
            applicable=False,
            value=len(ids),
            bound_value=None,
            holds=True,
            tight=False,
        )
    deg_h = [0] * g.n
    for e in ids:
        u, v = g.edges[e]
        deg_h[u] += 1
        deg_h[v] += 1
    dh = max(deg_h)
    sigma_h = ore_degree_of_subgraph(g, ids)
    bound = dh * (sigma_h - dh)
    return BoundCheck(
        spec_id="L8",
        params={},
        applicable=True,
        value=len(ids),
        bound_value=bound,
        holds=len(ids) <= bound,
        tight=len(ids) == bound,
    )
