"""
Tests for the command-line front end: output formats and exit codes.
"""

import csv
import io
import math

import pytest

from src.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS, SWEEP_CSV_COLUMNS, main
from src.graphs.core import complete_graph, cycle_graph, path_graph, to_edge_list
from src.models.schemas import ENERGY_CSV_COLUMNS, SUITE_CSV_COLUMNS


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as f:
        return list(csv.reader(f))


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph as an edge-list file and return its path."""
    def write(g, name="graph.txt"):
        path = tmp_path / name
        path.write_text(to_edge_list(g))
        return path
    return write


class TestEnergyCommand:
    """Tests for `energy`."""

    def test_p4(self, graph_file, tmp_path):
        out = tmp_path / "energy.csv"
        assert main(["energy", str(graph_file(path_graph(4))), "--out", str(out)]) == EXIT_OK
        rows = read_csv(out)
        assert rows[0] == ENERGY_CSV_COLUMNS
        assert len(rows) == 1 + 4 + 1
        assert rows[-1][0] == "total"
        assert float(rows[-1][1]) == pytest.approx(2 * math.sqrt(5), abs=1e-9)
        for row in rows[1:-1]:
            assert abs(float(row[1]) - float(row[2])) <= 1e-6

    def test_k2_to_stdout(self, graph_file, capsys):
        assert main(["energy", str(graph_file(path_graph(2)))]) == EXIT_OK
        captured = capsys.readouterr()
        rows = list(csv.reader(io.StringIO(captured.out)))
        assert float(rows[1][1]) == pytest.approx(1.0)
        assert float(rows[2][1]) == pytest.approx(1.0)
        assert "ENERGY PASS" in captured.err

    def test_malformed_file(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("3 2\n0 1\n")
        out = tmp_path / "energy.csv"
        assert main(["energy", str(bad), "--out", str(out)]) == EXIT_USAGE
        assert not out.exists()

    def test_missing_file(self, tmp_path):
        assert main(["energy", str(tmp_path / "absent.txt")]) == EXIT_USAGE


class TestCharPolyCommand:
    """Tests for `charpoly`."""

    def test_k2(self, graph_file, capsys):
        assert main(["charpoly", str(graph_file(path_graph(2)))]) == EXIT_OK
        assert capsys.readouterr().out == "-1 0 1\n1 1\n"

    def test_p4(self, graph_file, capsys):
        assert main(["charpoly", str(graph_file(path_graph(4)))]) == EXIT_OK
        assert capsys.readouterr().out == "1 0 -3 0 1\n1 3 1\n"

    def test_triangle(self, graph_file, capsys):
        assert main(["charpoly", str(graph_file(complete_graph(3)))]) == EXIT_OK
        assert capsys.readouterr().out == "-2 -3 0 1\nnot-bipartite\n"


class TestVerifyCommand:
    """Tests for `verify`."""

    def test_deterministic_output(self, tmp_path):
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["verify", "alternation", "--seed", "42", "--trials", "3", "--max-tree", "6", "--max-bip", "6"]
        assert main(args + ["--out", str(first)]) == EXIT_OK
        assert main(args + ["--out", str(second)]) == EXIT_OK
        assert first.read_bytes() == second.read_bytes()
        rows = read_csv(first)
        assert rows[0] == SUITE_CSV_COLUMNS
        assert all(row[0] == "alternation" for row in rows[1:])

    def test_summary_on_stderr(self, capsys):
        assert main(["verify", "stars"]) == EXIT_OK
        err = capsys.readouterr().err
        assert "SUITE stars PASS checked=150 violations=0 indeterminate=0" in err

    def test_unknown_suite(self, capsys):
        assert main(["verify", "unknown"]) == EXIT_USAGE
        err = capsys.readouterr().err
        assert "valid suites" in err
        assert "alternation" in err

    def test_invalid_epsilon(self, capsys):
        assert main(["verify", "stars", "--epsilon", "0"]) == EXIT_USAGE

    def test_metrics_file(self, tmp_path):
        pytest.importorskip("prometheus_client")
        metrics = tmp_path / "metrics.prom"
        assert main(["verify", "stars", "--metrics-file", str(metrics)]) == EXIT_OK
        assert "venergy_checks_total" in metrics.read_text()


class TestSweepCommand:
    """Tests for `sweep-star`."""

    def test_k2(self, graph_file, tmp_path):
        out = tmp_path / "sweep.csv"
        args = ["sweep-star", str(graph_file(path_graph(2))), "--vertex", "0", "--n", "1,2,3,4,5,6,7,8,9,10"]
        assert main(args + ["--out", str(out)]) == EXIT_OK
        rows = read_csv(out)
        assert rows[0] == SWEEP_CSV_COLUMNS
        assert len(rows) == 1 + 30
        leaves = [row for row in rows[1:] if row[1] == "leaf"]
        for row in leaves:
            n = int(row[0])
            assert float(row[2]) == pytest.approx(1 / math.sqrt(n + 1), abs=1e-9)
            assert row[5] == ""

    def test_empty_n_list(self, graph_file, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(["sweep-star", str(graph_file(path_graph(3))), "--n", "", "--out", str(out)]) == EXIT_OK
        assert read_csv(out) == [SWEEP_CSV_COLUMNS]

    def test_not_a_tree(self, graph_file):
        assert main(["sweep-star", str(graph_file(cycle_graph(4)))]) == EXIT_USAGE

    def test_vertex_out_of_range(self, graph_file):
        assert main(["sweep-star", str(graph_file(path_graph(3))), "--vertex", "5"]) == EXIT_USAGE


class TestUsage:
    """argparse-level errors."""

    def test_no_command(self):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == EXIT_USAGE

    def test_bad_n_list(self, graph_file):
        with pytest.raises(SystemExit) as excinfo:
            main(["sweep-star", str(graph_file(path_graph(3))), "--n", "1,x"])
        assert excinfo.value.code == EXIT_USAGE

    def test_exit_code_constants(self):
        assert (EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE) == (0, 1, 2)
