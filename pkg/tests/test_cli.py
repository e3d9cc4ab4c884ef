import json
import subprocess
import sys

import pytest

from reference_data import REF6_DIMACS, REF6_OMEGA

from cliqueorder import from_dimacs
from cliqueorder.cli import EXIT_COUNTEREXAMPLE, EXIT_OK, EXIT_USAGE, main


CHEAP_ENGINE = ["--outer-iters", "20", "--restarts", "2"]


@pytest.fixture
def ref6_file(tmp_path):
    path = tmp_path / "ref6.clq"
    path.write_text(REF6_DIMACS)
    return str(path)


class TestGen:
    def test_writes_named_instances(self, tmp_path, capsys):
        rc = main(["gen", "--n", "8", "--p", "0.5", "--instances", "3",
                   "--seed", "4", "--out", str(tmp_path)])
        assert rc == EXIT_OK
        names = sorted(p.name for p in tmp_path.iterdir())
        assert names == ["er_n8_p0.5_s4.clq", "er_n8_p0.5_s5.clq", "er_n8_p0.5_s6.clq"]
        for name in names:
            g = from_dimacs((tmp_path / name).read_text())
            assert g.n == 8
        out_lines = capsys.readouterr().out.strip().split("\n")
        assert len(out_lines) == 3 and out_lines[0].endswith("er_n8_p0.5_s4.clq")

    def test_seed_from_environment(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("CLIQUE_ORDER_SEED", "17")
        rc = main(["gen", "--n", "5", "--p", "0.3", "--out", str(tmp_path)])
        assert rc == EXIT_OK
        assert (tmp_path / "er_n5_p0.3_s17.clq").exists()

    def test_bad_environment_seed(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("CLIQUE_ORDER_SEED", "not-a-number")
        rc = main(["gen", "--n", "5", "--p", "0.3", "--out", str(tmp_path)])
        assert rc == EXIT_USAGE

    def test_explicit_seed_beats_environment(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("CLIQUE_ORDER_SEED", "17")
        rc = main(["gen", "--n", "5", "--p", "0.3", "--seed", "2", "--out", str(tmp_path)])
        assert rc == EXIT_OK
        assert (tmp_path / "er_n5_p0.3_s2.clq").exists()


class TestSolve:
    def test_json_payload(self, ref6_file, capsys):
        rc = main(["solve", ref6_file, "--seed", "0"])
        assert rc == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 6
        assert payload["seed"] == 0
        assert payload["ordering"] == "degree"
        assert payload["omega"] == REF6_OMEGA
        assert payload["steps"] >= 1
        assert payload["search_seconds"] >= 0.0
        assert sorted(payload["clique"]) == payload["clique"]
        assert "inference_seconds" not in payload

    def test_learned_reports_inference_seconds(self, ref6_file, capsys):
        rc = main(["solve", ref6_file, "--ordering", "learned", *CHEAP_ENGINE])
        assert rc == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["omega"] == REF6_OMEGA
        assert payload["inference_seconds"] > 0.0

    def test_random_ordering_seeded(self, ref6_file, capsys):
        rc = main(["solve", ref6_file, "--ordering", "random", "--seed", "9"])
        assert rc == EXIT_OK
        first = json.loads(capsys.readouterr().out)
        main(["solve", ref6_file, "--ordering", "random", "--seed", "9"])
        second = json.loads(capsys.readouterr().out)
        assert first["steps"] == second["steps"]

    def test_missing_file(self, capsys):
        assert main(["solve", "/nonexistent/graph.clq"]) == EXIT_USAGE

    def test_unknown_ordering(self, ref6_file, capsys):
        assert main(["solve", ref6_file, "--ordering", "mystery"]) == EXIT_USAGE

    def test_malformed_dimacs(self, tmp_path, capsys):
        bad = tmp_path / "bad.clq"
        bad.write_text("p edge 3 1\ne 1 9\n")
        assert main(["solve", str(bad)]) == EXIT_USAGE


class TestBench:
    def test_csv_to_stdout(self, capsys):
        rc = main(["bench", "--n", "10", "--p", "0.4,0.6", "--instances", "2",
                   "--ordering", "random,degree", "--seed", "3"])
        assert rc == EXIT_OK
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == "p,strategy,mean_steps,mean_search_s,mean_infer_s,mean_omega,mean_order_s"
        assert len(lines) == 5
        assert lines[1].startswith("0.4,random,")
        assert lines[4].startswith("0.6,degree,")

    def test_csv_to_file(self, tmp_path, capsys):
        out = tmp_path / "campaign.csv"
        rc = main(["bench", "--n", "8", "--p", "0.5", "--instances", "1",
                   "--ordering", "degree", "--out", str(out)])
        assert rc == EXIT_OK
        assert out.read_text().startswith("p,strategy,")

    def test_unknown_strategy(self, capsys):
        rc = main(["bench", "--n", "8", "--p", "0.5", "--instances", "1",
                   "--ordering", "degree,greedy"])
        assert rc == EXIT_USAGE

    def test_bad_p_list(self, capsys):
        rc = main(["bench", "--n", "8", "--p", "0.5,zebra", "--instances", "1"])
        assert rc == EXIT_USAGE


class TestLearnOrder:
    def test_stdout_perm_and_grid(self, ref6_file, capsys):
        rc = main(["learn-order", ref6_file, "--seed", "0", *CHEAP_ENGINE])
        assert rc == EXIT_OK
        lines = capsys.readouterr().out.strip().split("\n")
        assert len(lines) == 7
        perm = [int(tok) for tok in lines[0].split()]
        assert sorted(perm) == list(range(6))
        grid = [[int(tok) for tok in row.split()] for row in lines[1:]]
        assert all(len(row) == 6 for row in grid)
        assert all(grid[i][j] == grid[j][i] for i in range(6) for j in range(6))
        assert all(grid[i][i] == 0 for i in range(6))

    def test_out_prefix_writes_files(self, ref6_file, tmp_path, capsys):
        prefix = str(tmp_path / "run1")
        rc = main(["learn-order", ref6_file, "--out", prefix, *CHEAP_ENGINE])
        assert rc == EXIT_OK
        perm_text = (tmp_path / "run1.perm.txt").read_text()
        adj_text = (tmp_path / "run1.adj.txt").read_text()
        assert sorted(int(t) for t in perm_text.split()) == list(range(6))
        assert len(adj_text.strip().split("\n")) == 6
        printed = capsys.readouterr().out
        assert "run1.perm.txt" in printed and "run1.adj.txt" in printed

    def test_planted_block_moves_to_front(self, tmp_path, capsys, k6_plus_isolated):
        from cliqueorder import to_dimacs

        path = tmp_path / "planted.clq"
        path.write_text(to_dimacs(k6_plus_isolated))
        rc = main(["learn-order", str(path), "--outer-iters", "60", "--restarts", "2"])
        assert rc == EXIT_OK
        lines = capsys.readouterr().out.strip().split("\n")
        grid = [[int(tok) for tok in row.split()] for row in lines[1:]]
        assert all(grid[i][j] == 1 for i in range(6) for j in range(6) if i != j)


class TestVerifyLemma:
    def test_small_sweep_stdout(self, capsys):
        rc = main(["verify-lemma", "--max-exhaustive-n", "3", "--sampled-n", "5",
                   "--samples", "3", "--seed", "0"])
        assert rc == EXIT_OK
        captured = capsys.readouterr()
        lines = captured.out.strip().split("\n")
        assert len(lines) == 1 + 2 + 8 + 3
        for line in lines:
            payload = json.loads(line)
            assert payload["ok"] is True
        assert "checked 14 graphs, 0 counterexamples" in captured.err

    def test_out_file(self, tmp_path, capsys):
        out = tmp_path / "lemma.jsonl"
        rc = main(["verify-lemma", "--max-exhaustive-n", "2", "--samples", "0",
                   "--out", str(out)])
        assert rc == EXIT_OK
        assert len(out.read_text().strip().split("\n")) == 3

    def test_rejects_out_of_range_n(self, capsys):
        assert main(["verify-lemma", "--max-exhaustive-n", "9"]) == EXIT_USAGE
        assert main(["verify-lemma", "--sampled-n", "0"]) == EXIT_USAGE


class TestParsing:
    def test_no_subcommand(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == EXIT_USAGE

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == EXIT_OK

    def test_console_script_installed(self):
        proc = subprocess.run(
            [sys.executable, "-m", "cliqueorder.cli", "--help"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "gen" in proc.stdout and "verify-lemma" in proc.stdout

    def test_exit_codes_are_distinct(self):
        assert (EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE) == (0, 1, 2)
