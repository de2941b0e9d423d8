"""Tests for the command-line interface."""

import json

import pytest

from cli.app import CliConfig, build_parser, main
from cli.base_command import EXIT_BUDGET, EXIT_DISAGREEMENT, EXIT_INEQUIVALENT, EXIT_INPUT_ERROR, EXIT_OK
from reduction import cross_validation
from tests.helpers.samples import (
    DISCONNECTED_FILE,
    K4_TAIL_FILE,
    PATH_FILE,
    SAMPLE_FRONTIERS,
    SAMPLE_TREE_TEXT,
    SINGLE_EDGE_FILE,
)

TRIANGLE_INSTANCE = '{"R": {"a": 1, "b": 1, "c": 1}, "F": [{"a": 1, "b": 1}, {"b": 1, "c": 1}, {"a": 1, "c": 1}]}'
PAIR_INSTANCE = '{"R": {"a": 1, "b": 1}, "F": [{"a": 1, "b": 1}]}'


@pytest.fixture
def write(tmp_path):
    """Write text to a temporary file and return its path."""
    def writer(text, name):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return writer


def test_pq_count(write, capsys):
    """Test counting the sample tree."""
    assert main(["pq", "count", write(SAMPLE_TREE_TEXT, "t.pq")]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["12", "method: formula"]


def test_pq_count_repeated_labels(write, capsys):
    """Test that repeated labels fall back to enumeration."""
    assert main(["pq", "count", write("(P a a b)", "t.pq"), "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"count": 3, "method": "enumeration"}


def test_pq_count_budget(write, capsys):
    """Test exit code 3 when a Q-root count would outgrow the limit."""
    path = write("(Q (P a a b c) (P a b b c))", "t.pq")
    assert main(["pq", "count", path, "--limit", "20"]) == EXIT_BUDGET
    assert "error:" in capsys.readouterr().err
    assert main(["pq", "count", path, "--limit", "288"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "288"


def test_pq_enum(write, capsys):
    """Test frontier listing with the count trailer."""
    assert main(["pq", "enum", write(SAMPLE_TREE_TEXT, "t.pq")]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == "# count=12"
    assert {line.replace(" ", "") for line in lines[:-1]} == SAMPLE_FRONTIERS
    assert lines[:-1] == sorted(lines[:-1])


def test_pq_enum_json(write, capsys):
    """Test the JSON frontier listing."""
    assert main(["pq", "enum", write("(Q a b)", "t.pq"), "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"count": 2, "complete": True, "frontiers": ["a b", "b a"]}


def test_pq_enum_budget(write, capsys):
    """Test exit code 3 when the limit is too small."""
    assert main(["pq", "enum", write(SAMPLE_TREE_TEXT, "t.pq"), "--limit", "5"]) == EXIT_BUDGET
    assert "error:" in capsys.readouterr().err


def test_pq_canon(write, capsys):
    """Test canonical printing in both formats."""
    path = write("(P (P a) (Q b) (P c d e) (P))", "t.pq")
    assert main(["pq", "canon", path]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "(P a b (P c d e))"
    assert main(["pq", "canon", write("(P a b)", "u.pq"), "--format", "json"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == (
        '{"kind":"Q","children":[{"kind":"leaf","label":"a"},{"kind":"leaf","label":"b"}]}'
    )


def test_pq_equiv(write, capsys):
    """Test exit codes 0 and 1 of equivalence checking."""
    first = write("(Q a b c)", "a.pq")
    assert main(["pq", "equiv", first, write("(Q c b a)", "b.pq")]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "equivalent"
    assert main(["pq", "equiv", first, write("(Q b a c)", "c.pq")]) == EXIT_INEQUIVALENT
    assert capsys.readouterr().out.strip() == "inequivalent"


def test_pq_wrong_arity(write):
    """Test the number of tree arguments."""
    path = write("(Q a b)", "a.pq")
    assert main(["pq", "equiv", path]) == EXIT_INPUT_ERROR
    assert main(["pq", "count", path, path]) == EXIT_INPUT_ERROR


def test_pq_parse_error(write, capsys):
    """Test exit code 2 on malformed input."""
    assert main(["pq", "count", write("(P a b", "t.pq")]) == EXIT_INPUT_ERROR
    assert capsys.readouterr().err.startswith("error:")


def test_fmo_actions(write, capsys):
    """Test count, enum and decide."""
    pair = write(PAIR_INSTANCE, "pair.json")
    assert main(["fmo", "count", pair]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "2"
    assert main(["fmo", "enum", pair, "--engine", "naive"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["a b", "b a", "# count=2"]
    assert main(["fmo", "decide", write(TRIANGLE_INSTANCE, "tri.json")]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "infeasible"
    assert main(["fmo", "decide", pair, "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"feasible": True}


def test_fmo_invalid_instance(write, capsys):
    """Test exit code 2 on a violated assumption."""
    assert main(["fmo", "count", write('{"R": {"a": 1}, "F": [{"b": 1}]}', "bad.json")]) == EXIT_INPUT_ERROR
    assert "containment" in capsys.readouterr().err


def test_reduce_front(write, capsys):
    """Test the frontier-tree summary."""
    assert main(["reduce", "front", write(SINGLE_EDGE_FILE, "g.txt")]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert "t_e: (P $ # (Q 1 2))" in lines
    assert "t_e_children: 3" in lines
    assert "leaves: 4" in lines


def test_reduce_front_out(write, tmp_path, capsys):
    """Test writing the trees to a directory."""
    out = tmp_path / "trees"
    assert main(["reduce", "front", write(K4_TAIL_FILE, "g.txt"), "--out", str(out), "--format", "json"]) == EXIT_OK
    summary = json.loads(capsys.readouterr().out)
    assert summary["t_e_children"] == 9
    assert summary["t_n_leaves"] == ["1", "1", "2", "3", "4", "4"]
    assert sorted(p.name for p in out.iterdir()) == ["t_e.pq", "t_g.pq", "t_v.pq"]


def test_reduce_fmo(write, tmp_path, capsys):
    """Test the ordering-instance summary and export."""
    out = tmp_path / "fmo"
    assert main(["reduce", "fmo", write(PATH_FILE, "g.txt"), "--out", str(out), "--format", "json"]) == EXIT_OK
    summary = json.loads(capsys.readouterr().out)
    assert (summary["universe_size"], summary["family_size"], summary["a"]) == (12, 9, 1)
    assert (out / "instance.json").exists()
    assert main(["fmo", "count", str(out / "instance.json")]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "2"


@pytest.mark.parametrize("method", ["brute", "front", "fmo"])
def test_ham_single_method(write, capsys, method):
    """Test each counting route on its own."""
    assert main(["ham", write(PATH_FILE, "g.txt"), "--method", method]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "2"


def test_ham_all(write, capsys):
    """Test the cross-validation report."""
    assert main(["ham", write(SINGLE_EDGE_FILE, "g.txt")]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["agree"]
    assert report["via_front"]["value"] == report["via_fmo"]["value"] == report["brute"]["value"] == 2
    assert report["warnings"] == []


def test_ham_all_reports_skips(write, capsys):
    """Test that skipped routes appear as warnings."""
    assert main(["ham", write(K4_TAIL_FILE, "g.txt")]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["brute"]["value"] == 4
    assert len(report["warnings"]) == 2


def test_ham_disagreement(write, monkeypatch, capsys):
    """Test exit code 4 when routes disagree."""
    monkeypatch.setattr(cross_validation, "brute_force_ham", lambda instance: 5)
    assert main(["ham", write(SINGLE_EDGE_FILE, "g.txt")]) == EXIT_DISAGREEMENT
    assert not json.loads(capsys.readouterr().out)["agree"]


def test_ham_invalid_graph(write, capsys):
    """Test exit code 2 on a disconnected graph."""
    assert main(["ham", write(DISCONNECTED_FILE, "g.txt")]) == EXIT_INPUT_ERROR
    assert "connectivity" in capsys.readouterr().err


def test_argument_errors(capsys):
    """Test argparse failures and --version."""
    assert main([]) == EXIT_INPUT_ERROR
    assert main(["pq", "flatten", "t.pq"]) == EXIT_INPUT_ERROR
    assert main(["pq", "count", "t.pq", "--limit", "0"]) == EXIT_INPUT_ERROR
    assert main(["--version"]) == EXIT_OK
    assert "c1p-lab" in capsys.readouterr().out


def test_missing_file(tmp_path, capsys):
    """Test a missing input file."""
    assert main(["pq", "count", str(tmp_path / "missing.pq")]) == EXIT_INPUT_ERROR


def test_cli_config_defaults(monkeypatch):
    """Test that unset options come from the environment and config file."""
    monkeypatch.setenv("C1P_LAB_LIMIT", "99")
    args = build_parser().parse_args(["fmo", "count", "x.json"])
    config = CliConfig.from_args(args)
    assert (config.limit, config.engine, config.inputs, config.action) == (99, "pruned", ["x.json"], "count")
    args = build_parser().parse_args(["-v", "ham", "g.txt", "--limit", "1_000", "--engine", "naive"])
    config = CliConfig.from_args(args)
    assert (config.limit, config.engine, config.method, config.verbosity) == (1000, "naive", "all", 1)
