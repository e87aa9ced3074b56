import io
import json

import pytest

from logicrel.cli import run

from cli_cases import CASES


@pytest.mark.parametrize("case", CASES, ids=lambda c: c.name)
def test_golden(case, monkeypatch):
    for key, value in case.env.items():
        monkeypatch.setenv(key, value)
    stdin = io.StringIO(case.stdin) if case.stdin is not None else None
    code, out, err = run(list(case.argv), stdin)
    assert code == case.code
    assert err == case.stderr
    assert out == case.stdout_file.read_text(encoding="utf-8")


def test_json_envelope_key_order():
    code, out, _ = run(["classify", "p", "--json"])
    assert code == 1
    env = json.loads(out)
    assert list(env.keys()) == ["command", "mode", "universe", "result", "witness", "version"]
    assert env["version"]


def test_json_is_deterministic():
    first = run(["audit", "--json"])
    second = run(["audit", "--json"])
    assert first == second


def test_unknown_subcommand_is_usage_error():
    code, out, err = run(["frobnicate"])
    assert code == 2
    assert out == ""
    assert "invalid choice" in err


def test_help_exits_zero():
    code, out, err = run(["--help"])
    assert code == 0
    assert "classify" in out and "lattice" in out


def test_inline_and_corpus_are_mutually_exclusive():
    code, _, err = run(["classify", "p", "--corpus", "whatever.txt"])
    assert code == 2
    assert "not both" in err


def test_missing_corpus_file_is_input_error():
    code, _, err = run(["classify", "--corpus", "/nonexistent/corpus.txt"])
    assert code == 2
    assert "input error" in err


def test_corpus_stdin_requires_stdin():
    code, _, err = run(["classify", "--corpus", "-"], stdin=None)
    assert code == 2
    assert "stdin" in err


def test_dot_conflicts_with_json():
    code, _, err = run(["lattice", "1", "--dot", "--json"])
    assert code == 2
    assert "mutually exclusive" in err


def test_bad_universe_letters_are_input_errors():
    code, _, err = run(["classify", "p", "--universe", "p,P"])
    assert code == 2
    assert "input error" in err


def test_mode_material_vs_relational_default():
    rel = run(["classify", "p -> q"])
    mat = run(["classify", "p -> q", "--mode", "material"])
    assert rel[0] == 1 and "contradiction" in rel[1]
    assert mat[0] == 1 and "contingent" in mat[1]
