from __future__ import annotations

from fractions import Fraction

import pytest

from strongclique import (
    applicable_bounds,
    build_graph,
    check_bound,
    check_witness_edge_bound,
    exact_bound,
    find_spec,
    hairy_clique,
    strong_clique_number,
    theorem_registry,
)


def cycle(n: int):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bip(a: int, b: int):
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def instance(spec_id: str, k_max: int = 5, **params):
    for inst in theorem_registry(k_max):
        if inst.spec.spec_id == spec_id and inst.params == params:
            return inst
    raise AssertionError(f"no instance {spec_id} {params}")


def test_registry_size_and_unique_labels() -> None:
    instances = theorem_registry(5)
    labels = [inst.label for inst in instances]
    assert len(labels) == len(set(labels))
    assert len(instances) == 48
    assert "T3.3[k=2]" in labels
    assert "T5.1[kappa=11]" in labels
    assert "CONJ5[k=5]" in labels


def test_registry_shrinks_with_k_max() -> None:
    small = [inst.label for inst in theorem_registry(2)]
    assert "T3.3[k=2]" in small
    assert "T2.3[k=3]" not in small
    assert len(small) < 48
    with pytest.raises(ValueError):
        theorem_registry(1)


def test_find_spec_round_trips_ids() -> None:
    assert find_spec("T2.1").kind == "theorem"
    assert find_spec("CONJ4").kind == "conjecture"
    with pytest.raises(ValueError):
        find_spec("T99")


def test_bound_formulas_at_spot_values() -> None:
    assert exact_bound(instance("T3.1"), 4, None) == 9
    assert exact_bound(instance("T2.1"), 2, None) == 5
    assert exact_bound(instance("T2.1"), 3, None) == Fraction(45, 4)
    assert exact_bound(instance("T2.2"), 5, None) == 25
    assert exact_bound(instance("CONJ4", k=2), 4, None) == 9
    assert exact_bound(instance("CONJ5", k=3), 5, None) == 13
    assert exact_bound(instance("T3.3", k=2), 4, None) == 11
    assert exact_bound(instance("T9", k=2), 3, None) == 6
    assert exact_bound(instance("T9", k=3), 1, None) == 12  # the 2k(k-1) arm
    assert exact_bound(instance("T7"), 4, 6) == 9


def test_check_bound_is_tight_on_sharp_examples() -> None:
    c5 = cycle(5)
    omega = strong_clique_number(c5)[0]
    check = check_bound(c5, instance("T2.1"), omega)
    assert check.applicable and check.holds and check.tight
    assert check.bound_value == 5

    k33 = complete_bip(3, 3)
    omega = strong_clique_number(k33)[0]
    check = check_bound(k33, instance("T2.2"), omega)
    assert check.applicable and check.holds and check.tight
    assert check.bound_value == 9


def test_fractional_bounds_floor_to_integers() -> None:
    # triangle-free at odd Delta: 5*9/4 = 11.25 floors to 11
    g = complete_bip(3, 3)
    check = check_bound(g, instance("T2.1"), strong_clique_number(g)[0])
    assert check.bound_value == 11
    assert not check.tight


def test_not_applicable_entries_hold_vacuously() -> None:
    c5 = cycle(5)
    check = check_bound(c5, instance("T2.2"), 5)
    assert not check.applicable
    assert check.holds
    assert check.bound_value is None
    assert not check.tight


def test_min_delta_gates() -> None:
    # bound (2k-1)(Delta-k+1) would be beaten by these small dense graphs,
    # which sit below each entry's stated degree range
    c5 = cycle(5)
    assert not check_bound(c5, instance("CONJ4", k=2), 5).applicable
    k4 = complete(4)
    assert not check_bound(k4, instance("CONJ4", k=3), 6).applicable
    k6 = complete(6)
    assert not check_bound(k6, instance("CONJ4", k=4), 15).applicable
    # a lone edge is cycle-free but the 10k^2(Delta-1) form needs Delta >= 2
    k2 = build_graph(2, [(0, 1)])
    assert not check_bound(k2, instance("T3.2", k=3), 1).applicable


def test_t23_applies_only_above_its_threshold() -> None:
    # bipartite, so C7-free; rejected purely by the 3k^2+10k = 57 gate
    inst = instance("T2.3", k=3)
    g = complete_bip(3, 3)
    check = check_bound(g, inst, 9)
    assert not check.applicable


def test_bipartite_requirement() -> None:
    inst = instance("T13", k=2)
    c5 = cycle(5)
    assert not check_bound(c5, inst, 5).applicable
    c8 = cycle(8)
    check = check_bound(c8, inst, strong_clique_number(c8)[0])
    assert check.applicable and check.holds


def test_applicable_bounds_on_c6() -> None:
    labels = {inst.label for inst in applicable_bounds(cycle(6))}
    assert "T2.1" in labels
    assert "T2.2" in labels
    assert "T3.1" not in labels  # Delta 2 below the stated Delta >= 4
    # every window touching length 6 is out, the windows past it are in
    assert "T3.3[k=2]" not in labels
    assert "T3.3[k=3]" not in labels
    assert "T3.3[k=4]" in labels
    assert "T9[k=4]" in labels
    assert "T13[k=2]" not in labels
    assert "T5.1[kappa=6]" in labels
    assert "CONJ5[k=2]" in labels


def test_edgeless_graph_satisfies_nothing_applicably() -> None:
    assert applicable_bounds(build_graph(4, [])) == ()


def test_sigma_entry_uses_ore_degree() -> None:
    # K_{1,3}: sigma = 4, bound 4; the star's strong clique is its 3 edges
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    check = check_bound(star, instance("T7"), 3)
    assert check.applicable
    assert check.bound_value == 4
    assert check.holds and not check.tight


def test_check_bound_invariants_across_small_classes(enum6) -> None:
    instances = theorem_registry(3)
    for g in enum6[5]:
        omega = strong_clique_number(g)[0]
        for inst in instances:
            if inst.spec.target != "omega2":
                continue
            check = check_bound(g, inst, omega)
            assert check.holds == ((not check.applicable) or omega <= check.bound_value)
            if check.tight:
                assert check.applicable and omega == check.bound_value
            if not check.applicable:
                assert check.bound_value is None


def test_witness_edge_bound_on_triangle() -> None:
    k3 = complete(3)
    check = check_witness_edge_bound(k3, [0, 1, 2])
    assert check.applicable
    assert check.bound_value == 4  # Delta_H (sigma_G(H) - Delta_H) = 2 * 2
    assert check.holds and not check.tight


def test_witness_edge_bound_tight_on_stars() -> None:
    star = build_graph(6, [(0, i) for i in range(1, 6)])
    check = check_witness_edge_bound(star, range(5))
    assert check.applicable
    assert check.bound_value == 5  # 5 * (6 - 5)
    assert check.tight


def test_witness_edge_bound_counts_host_degrees() -> None:
    g, _ = hairy_clique(3, 4)
    omega, witness = strong_clique_number(g)
    assert omega == 9
    check = check_witness_edge_bound(g, witness.edge_ids)
    assert check.applicable
    assert check.bound_value == 16  # Delta_H 4, sigma_G(H) 8
    assert check.holds


def test_witness_edge_bound_skips_c5_hosts_and_empty_witnesses() -> None:
    c5 = cycle(5)
    assert not check_witness_edge_bound(c5, [0, 1, 2, 3, 4]).applicable
    assert not check_witness_edge_bound(complete(3), []).applicable
