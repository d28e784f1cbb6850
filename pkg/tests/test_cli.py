"""Command line interface: subcommands, report shape, exit codes, round trips."""

import io
import json

import pytest

from mkvis import __version__
from mkvis.cli import main
from mkvis.graphs import format_edge_list, parse_edge_list, path_graph


def run(capsys, monkeypatch, argv, stdin_text=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, monkeypatch, argv, stdin_text=None):
    code, out, err = run(capsys, monkeypatch, argv, stdin_text)
    assert out, f"no stdout (stderr: {err!r})"
    return code, json.loads(out), err


PATH5 = format_edge_list(path_graph(5))


class TestReports:
    def test_report_shape_and_version(self, capsys, monkeypatch):
        code, rep, _ = run_json(capsys, monkeypatch, ["mu", "-k", "1"], PATH5)
        assert code == 0
        assert rep["command"] == "mu"
        assert rep["version"] == __version__
        assert rep["input_summary"]["n"] == 5
        assert rep["input_summary"]["m"] == 4
        assert rep["result"]["value"] == 3
        assert sorted(rep["result"]) == ["nodes_explored", "value", "witness"]
        assert isinstance(rep["timing_seconds"], float)

    def test_determinism_modulo_timing(self, capsys, monkeypatch):
        argv = ["tau", "-k", "0"]
        _, one, _ = run_json(capsys, monkeypatch, argv, PATH5)
        _, two, _ = run_json(capsys, monkeypatch, argv, PATH5)
        one.pop("timing_seconds"), two.pop("timing_seconds")
        assert one == two

    def test_file_input(self, capsys, monkeypatch, tmp_path):
        f = tmp_path / "g.edges"
        f.write_text(PATH5)
        code, rep, _ = run_json(capsys, monkeypatch, ["mu", "-i", str(f), "-k", "0"])
        assert code == 0 and rep["result"]["value"] == 2
        assert rep["input_summary"]["source"] == str(f)

    def test_json_input(self, capsys, monkeypatch):
        payload = json.dumps({"n": 3, "edges": [[0, 1], [1, 2]]})
        code, rep, _ = run_json(capsys, monkeypatch, ["mu", "--json", "-k", "0"], payload)
        assert code == 0 and rep["result"]["value"] == 2


class TestCheck:
    def test_verdict_and_offender(self, capsys, monkeypatch):
        code, rep, _ = run_json(
            capsys, monkeypatch, ["check", "-k", "0", "--set", "0,2,4"], PATH5
        )
        assert code == 0
        assert rep["result"]["verdict"] is False
        assert rep["result"]["offending_pair"] == [0, 4]
        assert rep["result"]["offending_count"] == 1

    def test_strict_negative_exit(self, capsys, monkeypatch):
        code, _, _ = run_json(
            capsys, monkeypatch, ["check", "-k", "0", "--set", "0,2,4", "--strict"], PATH5
        )
        assert code == 1

    def test_strict_positive_exit(self, capsys, monkeypatch):
        code, rep, _ = run_json(
            capsys, monkeypatch, ["check", "-k", "1", "--set", "0,2,4", "--strict"], PATH5
        )
        assert code == 0 and rep["result"]["verdict"] is True

    def test_pair_counts(self, capsys, monkeypatch):
        _, rep, _ = run_json(
            capsys, monkeypatch,
            ["check", "-k", "0", "--set", "0,2,4", "--pair-counts"], PATH5,
        )
        assert [0, 4, 1] in rep["result"]["pair_counts"]

    def test_variant_check(self, capsys, monkeypatch):
        code, rep, _ = run_json(
            capsys, monkeypatch,
            ["check", "-k", "2", "--set", "1,2", "--variant", "total"],
            format_edge_list(path_graph(4)),
        )
        assert code == 0 and rep["result"]["verdict"] is True

    def test_variant_rejects_pair_counts(self, capsys, monkeypatch):
        code, _, err = run(
            capsys, monkeypatch,
            ["check", "-k", "0", "--set", "1", "--variant", "total", "--pair-counts"],
            PATH5,
        )
        assert code == 2 and "pair-counts" in err

    def test_bad_set_syntax(self, capsys, monkeypatch):
        code, _, err = run(
            capsys, monkeypatch, ["check", "-k", "0", "--set", "0,x"], PATH5
        )
        assert code == 2 and "comma-separated" in err


class TestGen:
    def test_families_round_trip(self, capsys, monkeypatch):
        for argv, n, m in [
            (["gen", "path", "6"], 6, 5),
            (["gen", "cycle", "5"], 5, 5),
            (["gen", "complete", "4"], 4, 6),
            (["gen", "bipartite", "2", "3"], 5, 6),
        ]:
            code, out, _ = run(capsys, monkeypatch, argv)
            assert code == 0
            g = parse_edge_list(out)
            assert (g.n, g.m) == (n, m)

    def test_seeded_families_embed_seed(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["gen", "random", "8", "0.3", "--seed", "7"])
        assert code == 0 and "# seed 7" in out
        again = run(capsys, monkeypatch, ["gen", "random", "8", "0.3", "--seed", "7"])[1]
        assert out == again
        code, out, _ = run(capsys, monkeypatch, ["gen", "block", "3", "3", "--seed", "2"])
        assert code == 0 and parse_edge_list(out).n >= 3

    def test_seed_is_required_for_random(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["gen", "random", "8", "0.3"])
        assert code == 2 and "--seed" in err

    def test_seed_rejected_for_fixed_families(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["gen", "path", "5", "--seed", "3"])
        assert code == 2 and "no --seed" in err

    def test_wrong_parameter_count(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["gen", "path"])
        assert code == 2 and "expects parameters" in err

    def test_bad_parameter_type(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["gen", "path", "five"])
        assert code == 2 and "must be int" in err

    def test_unknown_family(self, capsys, monkeypatch):
        assert run(capsys, monkeypatch, ["gen", "torus", "3"])[0] == 2

    def test_pipe_into_check(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["gen", "cycle", "7"])
        code, rep, _ = run_json(
            capsys, monkeypatch, ["check", "-k", "1", "--set", "0,1,2,4,5"], out
        )
        assert code == 0 and rep["result"]["verdict"] is True


class TestSolverCommands:
    def test_mu_variant(self, capsys, monkeypatch):
        code, rep, _ = run_json(
            capsys, monkeypatch,
            ["mu-variant", "-k", "0", "--variant", "total"],
            format_edge_list(path_graph(3)),
        )
        assert code == 0 and rep["result"]["value"] == 2

    def test_gp(self, capsys, monkeypatch):
        code, rep, _ = run_json(capsys, monkeypatch, ["gp"], PATH5)
        assert code == 0 and rep["result"]["value"] == 2

    def test_poly(self, capsys, monkeypatch):
        code, rep, _ = run_json(
            capsys, monkeypatch, ["poly", "-k", "0"], format_edge_list(path_graph(3))
        )
        assert code == 0
        assert rep["result"]["coefficients"] == [1, 3, 3, 0]
        assert rep["result"]["degree"] == 2
        assert rep["result"]["pretty"] == "1 + 3x + 3x^2"

    def test_bounds(self, capsys, monkeypatch):
        code, rep, _ = run_json(
            capsys, monkeypatch, ["bounds", "-k", "0"],
            format_edge_list(path_graph(6)),
        )
        assert code == 0
        assert rep["result"]["girth_bound"] is None  # INFINITE serializes as null
        assert rep["result"]["diameter_bound"] == 2

    def test_tau_partition_revalidates(self, capsys, monkeypatch):
        code, rep, _ = run_json(capsys, monkeypatch, ["tau", "-k", "1"], PATH5)
        assert code == 0 and rep["result"]["value"] == 2
        for part in rep["result"]["partition"]:
            ids = ",".join(map(str, part))
            sub_code, sub_rep, _ = run_json(
                capsys, monkeypatch,
                ["check", "-k", "1", "--set", ids, "--strict"], PATH5,
            )
            assert sub_code == 0 and sub_rep["result"]["verdict"] is True

    def test_cover_greedy(self, capsys, monkeypatch):
        code, rep, _ = run_json(capsys, monkeypatch, ["cover-greedy", "-k", "0"], PATH5)
        assert code == 0
        assert rep["result"]["part_count"] == len(rep["result"]["partition"])

    def test_blocks_and_strict(self, capsys, monkeypatch):
        bowtie = "5 6\n0 1\n0 4\n1 4\n2 3\n2 4\n3 4\n"
        code, rep, _ = run_json(capsys, monkeypatch, ["blocks"], bowtie)
        assert code == 0
        assert rep["result"]["is_block_graph"] is True
        assert rep["result"]["articulation"] == [4]
        cycle = "4 4\n0 1\n1 2\n2 3\n3 0\n"
        assert run_json(capsys, monkeypatch, ["blocks", "--strict"], cycle)[0] == 1

    def test_mu_block(self, capsys, monkeypatch):
        bowtie = "5 6\n0 1\n0 4\n1 4\n2 3\n2 4\n3 4\n"
        code, rep, _ = run_json(capsys, monkeypatch, ["mu-block", "-k", "0"], bowtie)
        assert code == 0 and rep["result"]["value"] == 4

    def test_oracle_agreement(self, capsys, monkeypatch):
        code, rep, _ = run_json(
            capsys, monkeypatch, ["oracle", "--set", "1,3", "--strict"],
            format_edge_list(path_graph(6)),
        )
        assert code == 0
        assert rep["result"]["match"] is True
        assert rep["result"]["pairs_checked"] == 15


class TestExitCodes:
    def test_usage_error(self, capsys, monkeypatch):
        assert main(["mu"]) == 2  # missing -k
        capsys.readouterr()

    def test_unknown_subcommand(self, capsys, monkeypatch):
        assert main(["warp"]) == 2
        capsys.readouterr()

    def test_bad_edge_list(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["mu", "-k", "0"], "garbage\n")
        assert code == 2 and "line 1" in err

    def test_missing_file(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["mu", "-i", "/no/such/file", "-k", "0"])
        assert code == 2 and "cannot read" in err

    def test_bad_json(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["mu", "--json", "-k", "0"], "{short")
        assert code == 2 and "JSON" in err

    def test_size_limit_refusal(self, capsys, monkeypatch):
        big = format_edge_list(path_graph(30))
        code, _, err = run(capsys, monkeypatch, ["mu", "-k", "0"], big)
        assert code == 3 and "refused" in err
        code, rep, _ = run_json(capsys, monkeypatch, ["mu", "-k", "0", "--max-n", "30"], big)
        assert code == 0 and rep["result"]["value"] == 2

    def test_disconnected_input(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["mu", "-k", "0"], "4 2\n0 1\n2 3\n")
        assert code == 2 and "connected" in err

    def test_version_flag(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["--version"])
        assert code == 0 and __version__ in out

    def test_help_exits_zero(self, capsys, monkeypatch):
        assert run(capsys, monkeypatch, ["--help"])[0] == 0
        assert run(capsys, monkeypatch, ["check", "--help"])[0] == 0
