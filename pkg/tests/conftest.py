"""Shared fixtures.

The exhaustive small-graph corpus and its full sweep take tens of
seconds to build, so they are session-scoped and shared between the
module tests and the acceptance suite.
"""

from __future__ import annotations

from types import SimpleNamespace

import pytest

from strongclique import enumerate_graphs, format_graph6, sweep


@pytest.fixture(scope="session")
def enum6():
    """Representatives of every isomorphism class on exactly n vertices,
    for n = 1..6."""
    return {n: list(enumerate_graphs(n)) for n in range(1, 7)}


@pytest.fixture(scope="session")
def sweep8():
    """Every class with n <= 8 plus its sweep records and report."""
    lines: list[str] = []
    for n in range(1, 9):
        lines.extend(format_graph6(g) for g in enumerate_graphs(n))
    records: list[dict] = []
    report = sweep(
        lines, k_max=5, include_chi=False, workers=1, record_sink=records.append
    )
    return SimpleNamespace(lines=lines, records=records, report=report)
