"""Command-line interface: exit codes, output shapes, file handling.

Everything drives cli.main(argv) in-process; stdout/stderr come from capsys.
"""

import json

import pytest

from cliquespectra.cli import main
from cliquespectra.graphs import parse_dimacs, parse_edge_list

DIAMOND = "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n"


@pytest.fixture
def diamond_file(tmp_path):
    p = tmp_path / "diamond.el"
    p.write_text(DIAMOND)
    return str(p)


class TestSpectral:
    def test_basic_output(self, diamond_file, capsys):
        assert main(["spectral", diamond_file, "--t", "3"]) == 0
        out = capsys.readouterr().out
        assert "rho_3 = 1.5874010520" in out
        assert "converged = true" in out

    def test_json_output(self, diamond_file, capsys):
        assert main(["spectral", diamond_file, "--t", "2", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["t"] == 2
        assert data["rho"] == pytest.approx(2.5615528128088303, abs=1e-9)
        assert data["lower"] <= data["rho"] <= data["upper"]
        assert data["converged"] is True
        assert len(data["vector"]) == 4

    def test_stdin_dash(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(DIAMOND))
        assert main(["spectral", "-", "--t", "3"]) == 0
        assert "rho_3" in capsys.readouterr().out

    def test_nonconvergence_exit_code(self, diamond_file, capsys):
        assert main(["spectral", diamond_file, "--t", "3", "--max-iter", "2"]) == 3
        assert "converged = false" in capsys.readouterr().out

    def test_missing_file(self, capsys):
        assert main(["spectral", "/nonexistent/g.el", "--t", "2"]) == 2

    def test_bad_t(self, diamond_file, capsys):
        assert main(["spectral", diamond_file, "--t", "1"]) == 2
        assert "error" in capsys.readouterr().err

    def test_parse_error_reported(self, tmp_path, capsys):
        p = tmp_path / "bad.el"
        p.write_text("0 1\nnot an edge\n")
        assert main(["spectral", str(p), "--t", "2"]) == 2
        assert "line 2" in capsys.readouterr().err


class TestBounds:
    def test_table_output(self, diamond_file, capsys):
        assert main(["bounds", diamond_file, "--t", "3"]) == 0
        out = capsys.readouterr().out
        assert "equality case: multipartite-omega-eq-t" in out
        assert "radius_clique_local" in out
        assert "not applicable" not in out  # order-uniformity applies at t=3

    def test_t2_marks_inapplicable(self, diamond_file, capsys):
        assert main(["bounds", diamond_file, "--t", "2"]) == 0
        assert "not applicable" in capsys.readouterr().out

    def test_json_output(self, diamond_file, capsys):
        assert main(["bounds", diamond_file, "--t", "3", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["omega"] == 3
        assert data["equality_case"] == "multipartite-omega-eq-t"
        names = [b["name"] for b in data["bounds"]]
        assert "zykov_spectral" in names and "turan_edges" in names

    def test_no_spectral_flag(self, diamond_file, capsys):
        assert main(["bounds", diamond_file, "--t", "3", "--no-spectral", "--json"]) == 0
        names = [b["name"] for b in json.loads(capsys.readouterr().out)["bounds"]]
        assert "zykov_spectral" not in names
        assert "count_vertex_orders" in names


class TestCliques:
    def test_listing(self, diamond_file, capsys):
        assert main(["cliques", diamond_file, "--t", "3"]) == 0
        out = capsys.readouterr().out
        assert "count = 2" in out
        assert "0 1 2 (alpha=3)" in out

    def test_json(self, diamond_file, capsys):
        assert main(["cliques", diamond_file, "--t", "3", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["cliques"] == [[0, 1, 2], [0, 1, 3]]
        assert data["c_t"] == [2, 2, 1, 1]
        assert data["alpha_v"] == [3, 3, 3, 3]


class TestVerify:
    def test_small_sweep_summary(self, capsys):
        assert main(["verify", "--n-max", "3"]) == 0
        out = capsys.readouterr().out
        assert "graphs checked:     11" in out
        assert "violations:         0" in out
        assert "census mismatches:  0" in out

    def test_budget_rejected(self, capsys):
        assert main(["verify", "--n-max", "9"]) == 2
        assert "exceeds" in capsys.readouterr().err

    def test_report_and_csv_files(self, tmp_path, capsys):
        out = tmp_path / "rep.json"
        csvp = tmp_path / "rows.csv"
        code = main(
            ["verify", "--n-max", "3", "--out", str(out), "--csv", str(csvp)]
        )
        assert code == 0
        data = json.loads(out.read_text())
        assert data["graphs_checked"] == 11
        header = csvp.read_text().splitlines()[0]
        assert header.startswith("graph_id,n,m,omega,t,bound")

    def test_csv_conflicts_with_no_collect(self, tmp_path, capsys):
        code = main(
            ["verify", "--n-max", "3", "--no-collect-rows", "--csv", str(tmp_path / "x.csv")]
        )
        assert code == 2

    def test_json_flag(self, capsys):
        assert main(["verify", "--n-max", "2", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["violation_total"] == 0
        assert "runtime_seconds" not in data

    def test_t_values_flag(self, capsys):
        assert main(["verify", "--n-max", "3", "--t-values", "2"]) == 0

    def test_no_spectral_extends_budget(self, capsys):
        assert main(["verify", "--n-max", "7", "--no-spectral", "--t-values", "3"]) == 0
        assert "violations:         0" in capsys.readouterr().out


class TestGenerate:
    def test_multipartite_pipe_shape(self, capsys):
        assert main(["generate", "multipartite", "--sizes", "2,2,2"]) == 0
        g = parse_edge_list(capsys.readouterr().out)
        assert g.n == 6 and g.edge_count == 12

    def test_dimacs_format(self, capsys):
        assert main(["generate", "gnp", "--n", "6", "--p", "0.5", "--seed", "7",
                     "--format", "dimacs"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("p edge 6 ")
        parse_dimacs(out)

    def test_deterministic_gnp(self, capsys):
        main(["generate", "gnp", "--n", "8", "--p", "0.4", "--seed", "5"])
        first = capsys.readouterr().out
        main(["generate", "gnp", "--n", "8", "--p", "0.4", "--seed", "5"])
        assert capsys.readouterr().out == first

    def test_to_file(self, tmp_path):
        p = tmp_path / "g.el"
        assert main(["generate", "petersen", "--out", str(p)]) == 0
        g = parse_edge_list(p.read_text())
        assert g.n == 10 and g.edge_count == 15

    def test_turan_and_cycle_and_path(self, capsys):
        assert main(["generate", "turan", "--n", "7", "--r", "3"]) == 0
        assert parse_edge_list(capsys.readouterr().out).edge_count == 16
        assert main(["generate", "cycle", "--n", "5"]) == 0
        capsys.readouterr()
        assert main(["generate", "path", "--n", "4"]) == 0

    def test_missing_parameters(self, capsys):
        assert main(["generate", "multipartite"]) == 2
        assert main(["generate", "gnp", "--n", "5"]) == 2
        assert main(["generate", "turan", "--n", "5"]) == 2
        assert main(["generate", "cycle"]) == 2

    def test_invalid_sizes(self, capsys):
        assert main(["generate", "multipartite", "--sizes", "2,0"]) == 2


class TestPipelines:
    def test_generate_then_spectral(self, tmp_path, capsys):
        p = tmp_path / "k222.el"
        assert main(["generate", "multipartite", "--sizes", "2,2,2", "--out", str(p)]) == 0
        assert main(["spectral", str(p), "--t", "3"]) == 0
        assert "rho_3 = 4.0000000000" in capsys.readouterr().out

    def test_verify_twice_identical_bytes(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = ["verify", "--n-max", "3", "--seed", "11", "--random-trials", "4"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()
