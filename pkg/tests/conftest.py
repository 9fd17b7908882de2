"""Shared fixtures.

The exhaustive sweeps are expensive enough that we run each exactly once per
session and let both the unit tests and the acceptance tests read from the
same reports.
"""

from __future__ import annotations

import pytest

from cliquespectra import SuiteConfig, run_suite
from cliquespectra.graphs import Graph, complete_multipartite


@pytest.fixture(scope="session")
def spectral_suite_report():
    # every graph on <= 6 vertices, both tensor orders, certified radii
    cfg = SuiteConfig(n_max=6, t_values=(2, 3), spectral=True, collect_rows=False)
    return run_suite(cfg.validated())


@pytest.fixture(scope="session")
def combinatorial_suite_report():
    # radius-free inequalities only, one vertex further out
    cfg = SuiteConfig(n_max=7, t_values=(2, 3), spectral=False, collect_rows=False)
    return run_suite(cfg.validated())


@pytest.fixture(scope="session")
def diamond():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture(scope="session")
def octahedron():
    # K_{2,2,2}
    return complete_multipartite([2, 2, 2])
