"""Verification driver: config validation, kernel-vs-library agreement,
byte determinism, report round-trips.

The compiled sweeps and library_graph_eval implement one recipe twice; the
cross-validation tests here are what entitles the fast path to speak for the
slow one.
"""

import csv
import json

import pytest

from cliquespectra import fastsweep
from cliquespectra.graphs import Graph
from cliquespectra.verify import (
    SuiteConfig,
    VerificationReport,
    canonical_report_bytes,
    emit_report,
    enumerate_all_graphs,
    equality_census,
    library_graph_eval,
    load_report,
    run_suite,
)


class TestConfig:
    def test_defaults_fill_in(self):
        cfg = SuiteConfig(n_max=4).validated()
        assert cfg.t_values == (2, 3)
        assert cfg.collect_rows is True  # small n defaults to keeping rows
        assert SuiteConfig(n_max=6).validated().collect_rows is False

    def test_budget_caps(self):
        with pytest.raises(ValueError, match="spectral sweep budget of 6"):
            SuiteConfig(n_max=7).validated()
        with pytest.raises(ValueError, match="radius-free sweep budget of 7"):
            SuiteConfig(n_max=8, spectral=False).validated()
        SuiteConfig(n_max=7, spectral=False).validated()  # fine

    def test_rejects_bad_values(self):
        with pytest.raises(ValueError):
            SuiteConfig(n_max=0).validated()
        with pytest.raises(ValueError):
            SuiteConfig(n_max=4, t_values=(1, 2)).validated()
        with pytest.raises(ValueError):
            SuiteConfig(n_max=4, t_values=()).validated()
        with pytest.raises(ValueError):
            SuiteConfig(n_max=4, tol=0.0).validated()
        with pytest.raises(ValueError):
            SuiteConfig(n_max=4, seed=-1).validated()
        with pytest.raises(ValueError):
            SuiteConfig(n_max=4, parallelism=0).validated()
        with pytest.raises(ValueError):
            SuiteConfig(n_max=4, random_trials=-1).validated()

    def test_t_values_normalized(self):
        cfg = SuiteConfig(n_max=4, t_values=[3, 2, 3]).validated()
        assert cfg.t_values == (2, 3)


class TestEnumeration:
    def test_counts(self):
        assert sum(1 for _ in enumerate_all_graphs(1)) == 1
        assert sum(1 for _ in enumerate_all_graphs(3)) == 8
        assert sum(1 for _ in enumerate_all_graphs(4)) == 64
        with pytest.raises(ValueError):
            next(enumerate_all_graphs(0))
        with pytest.raises(ValueError):
            next(enumerate_all_graphs(9))

    def test_mask_order(self):
        got = list(enumerate_all_graphs(3))
        assert got[0].edge_count == 0
        assert got[-1].edge_count == 3  # the triangle closes the list


@pytest.fixture(scope="module")
def kernel_n4():
    return run_suite(SuiteConfig(n_max=4, collect_rows=False))


@pytest.fixture(scope="module")
def library_n4():
    return run_suite(SuiteConfig(n_max=4, collect_rows=True))


class TestKernelLibraryAgreement:
    """Same recipe, compiled and interpreted, must tell the same story."""

    def test_totals_match(self, kernel_n4, library_n4):
        assert kernel_n4.graphs_checked == library_n4.graphs_checked == 75
        assert kernel_n4.bounds_checked == library_n4.bounds_checked
        assert kernel_n4.violation_total == library_n4.violation_total == 0
        assert kernel_n4.nonconverged == library_n4.nonconverged == 0

    def test_census_identical(self, kernel_n4, library_n4):
        assert kernel_n4.census == library_n4.census

    def test_worst_gaps_match(self, kernel_n4, library_n4):
        assert set(kernel_n4.worst_gaps) == set(library_n4.worst_gaps)
        for key, gap in kernel_n4.worst_gaps.items():
            assert gap == pytest.approx(library_n4.worst_gaps[key], abs=1e-9), key

    def test_diagnostics_match(self, kernel_n4, library_n4):
        assert kernel_n4.t2_reduction_max_dev == pytest.approx(
            library_n4.t2_reduction_max_dev, abs=1e-12
        )
        assert kernel_n4.witness_sum_max_dev == pytest.approx(
            library_n4.witness_sum_max_dev, abs=1e-12
        )
        assert kernel_n4.max_interval_width == pytest.approx(
            library_n4.max_interval_width, abs=1e-11
        )

    def test_combinatorial_paths_agree(self):
        fast = run_suite(SuiteConfig(n_max=4, spectral=False, collect_rows=False))
        slow = run_suite(SuiteConfig(n_max=4, spectral=False, collect_rows=True))
        assert fast.graphs_checked == slow.graphs_checked
        assert fast.bounds_checked == slow.bounds_checked
        assert fast.violation_total == slow.violation_total == 0
        assert fast.census == slow.census == {}
        for key, gap in fast.worst_gaps.items():
            assert gap == pytest.approx(slow.worst_gaps[key], abs=1e-9), key

    def test_library_rows_on_a_hard_graph(self):
        # diamond mask inside n=4: edges 01,02,03,12,13 -> bits 0,1,2,3,4
        cfg = SuiteConfig(n_max=4).validated()
        g = Graph.from_edge_mask(4, 0b011111)
        ev = library_graph_eval(g, 0b011111, cfg)
        names = {(r.bound, r.t) for r in ev.rows}
        assert ("radius_clique_local", 3) in names
        assert ("weighted_clique_sum", 3) in names
        assert ("maclaurin_s2_q3", 3) in names
        assert all(r.holds for r in ev.rows)


class TestDeterminism:
    def test_identical_configs_identical_bytes(self):
        cfg = SuiteConfig(n_max=3, random_trials=5, seed=99)
        a = run_suite(cfg)
        b = run_suite(cfg)
        assert canonical_report_bytes(a) == canonical_report_bytes(b)

    def test_parallel_merge_matches_serial(self):
        serial = run_suite(SuiteConfig(n_max=4, collect_rows=False, parallelism=1))
        parallel = run_suite(SuiteConfig(n_max=4, collect_rows=False, parallelism=2))
        ds, dp = serial.to_json_dict(), parallel.to_json_dict()
        assert ds.pop("config")["n_max"] == dp.pop("config")["n_max"]
        assert ds == dp

    def test_seed_changes_oracle_but_not_sweep(self):
        a = run_suite(SuiteConfig(n_max=3, random_trials=3, seed=1))
        b = run_suite(SuiteConfig(n_max=3, random_trials=3, seed=2))
        assert a.census == b.census
        assert a.worst_gaps == b.worst_gaps
        assert a.oracle != b.oracle or a.oracle["max_dev"] == b.oracle["max_dev"]


class TestReportIO:
    def test_roundtrip(self, tmp_path, kernel_n4):
        path = tmp_path / "report.json"
        emit_report(kernel_n4, str(path))
        back = load_report(str(path))
        assert back == kernel_n4  # rows/runtime excluded from equality
        assert canonical_report_bytes(back) == canonical_report_bytes(kernel_n4)

    def test_canonical_bytes_stable_shape(self, kernel_n4):
        data = json.loads(canonical_report_bytes(kernel_n4))
        assert set(data) == {
            "config",
            "graphs_checked",
            "bounds_checked",
            "violation_total",
            "violations",
            "census",
            "worst_gaps",
            "max_interval_width",
            "nonconverged",
            "t2_reduction_max_dev",
            "witness_sum_max_dev",
            "oracle",
        }
        assert "runtime" not in canonical_report_bytes(kernel_n4).decode()

    def test_csv_export(self, tmp_path, library_n4):
        jpath, cpath = tmp_path / "r.json", tmp_path / "rows.csv"
        emit_report(library_n4, str(jpath), csv_path=str(cpath))
        with open(cpath, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == library_n4.bounds_checked
        assert set(rows[0]) == {
            "graph_id", "n", "m", "omega", "t", "bound", "vector",
            "lhs", "rhs", "holds", "gap", "equality_numeric", "equality_structural",
        }
        assert all(r["holds"] == "true" for r in rows)

    def test_csv_requires_rows(self, tmp_path, kernel_n4):
        with pytest.raises(ValueError, match="collect_rows"):
            emit_report(kernel_n4, str(tmp_path / "r.json"), csv_path=str(tmp_path / "rows.csv"))


class TestSweepFindings:
    """Facts established by the full session sweeps (shared fixtures)."""

    def test_spectral_sweep_clean(self, spectral_suite_report):
        rep = spectral_suite_report
        assert rep.graphs_checked == 33867  # graphs on 1..6 vertices
        assert rep.violation_total == 0
        assert rep.violations == []
        assert rep.nonconverged == 0
        assert rep.max_interval_width <= 1e-10 + 1e-12

    def test_census_has_no_mismatches_anywhere(self, spectral_suite_report):
        census = spectral_suite_report.census
        assert census  # nonempty
        for key, stats in census.items():
            assert stats["mismatches"] == 0, key
            assert stats["examples"] == [], key
            assert 0 <= stats["equalities"] <= stats["checked"], key

    def test_census_equality_counts_agree_across_equivalent_predicates(
        self, spectral_suite_report
    ):
        census = spectral_suite_report.census
        # these pairs share one structural characterization, so their
        # equality counts over a full catalog must coincide
        def eq(key):
            return census[key]["equalities"]

        for t in (2, 3):
            assert eq(f"zykov_spectral@t{t}") == eq(f"radius_clique_local@t{t}")
            assert eq(f"radius_clique_local@t{t}") == eq(f"radius_vertex_counts@t{t}")
            assert eq(f"weight_count_balance@t{t}") == eq(f"radius_vertex_local@t{t}")
            assert eq(f"count_vertex_weighted@t{t}") == eq(f"count_vertex_orders@t{t}")
            assert eq(f"weighted_clique_sum@t{t}") == eq(f"weighted_vertex_sum@t{t}")

    def test_combinatorial_sweep_clean(self, combinatorial_suite_report):
        rep = combinatorial_suite_report
        assert rep.graphs_checked == 2131019  # graphs on 1..7 vertices
        assert rep.violation_total == 0
        assert rep.census == {}

    def test_worst_gaps_nonnegative(self, spectral_suite_report, combinatorial_suite_report):
        for rep in (spectral_suite_report, combinatorial_suite_report):
            for key, gap in rep.worst_gaps.items():
                assert gap >= -1e-9, key

    def test_equality_census_helper(self):
        cfg = SuiteConfig(n_max=3, collect_rows=False)
        assert equality_census(cfg) == run_suite(cfg).census


class TestOracleCampaign:
    def test_small_campaign(self):
        rep = run_suite(SuiteConfig(n_max=1, random_trials=20, seed=7))
        assert rep.oracle is not None
        assert rep.oracle["trials"] == 20
        assert rep.oracle["enclosure_failures"] == 0
        assert rep.oracle["max_dev"] <= 1e-6

    def test_no_campaign_without_trials(self, kernel_n4):
        assert kernel_n4.oracle is None


class TestSlotLayout:
    """The kernel's fixed slot table has to stay aligned with the bound names."""

    def test_bound_names_complete(self):
        assert len(fastsweep.BOUND_NAMES) == fastsweep.N_BOUNDS == 16
        assert len(set(fastsweep.BOUND_NAMES)) == 16
        assert fastsweep.T_INDEPENDENT <= set(fastsweep.BOUND_NAMES)
        assert set(fastsweep.CENSUSED) == set(fastsweep.BOUND_NAMES[:15])
        assert "maclaurin_s2_q3" not in fastsweep.CENSUSED

    def test_prf_reference_values(self):
        # the pure-Python twin must keep producing the exact historical
        # stream; the kernels embed the same finalizer
        a = fastsweep.rand_unit(0, 4, 5, 3, 0, 0)
        b = fastsweep.rand_unit(0, 4, 5, 3, 0, 0)
        assert a == b
        assert 0.0 <= a < 1.0
        assert fastsweep.rand_unit(1, 4, 5, 3, 0, 0) != a
        assert fastsweep.rand_unit(0, 4, 6, 3, 0, 0) != a
