import json
import os
import shutil
import subprocess
import sys

import jsonschema
import pytest
from hypothesis import given, settings, strategies as st

from nlogic.cli import run

from proofgen import GOLDEN_DIR, ROOT, golden_files, mutated_files

PRELUDE = os.path.join(GOLDEN_DIR, "theory.prelude")
SCHEMA = json.load(open(os.path.join(ROOT, "tests", "data", "report_schema.json")))


def nl(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def base(path):
    return os.path.basename(path)


# -- type / parse / reduce

def test_type_of_zero(capsys):
    code, out, _ = nl(capsys, "type", "-e", "0", "--prelude", "empty")
    assert code == 0
    assert out.splitlines() == ["i o", "i"]


def test_type_of_formula(capsys):
    code, out, _ = nl(capsys, "type", "p /\\ q", "--prelude", PRELUDE)
    assert (code, out.splitlines()) == (0, ["o"])


def test_type_ill_typed_exits_one(capsys):
    code, _, err = nl(capsys, "type", "-e", "\\x:i. x", "--prelude", "empty")
    assert code == 1
    assert "error" in err and "^" in err


def test_type_syntax_error_exits_two(capsys):
    code, _, err = nl(capsys, "type", "-e", "p /\\", "--prelude", PRELUDE)
    assert code == 2
    assert "^" in err


def test_unknown_identifier_exits_two(capsys):
    code, _, _ = nl(capsys, "type", "-e", "zz", "--prelude", "empty")
    assert code == 2


def test_parse_prints_kernel_term(capsys):
    code, out, _ = nl(capsys, "parse", "-e", "~p", "--prelude", PRELUDE)
    assert (code, out.strip()) == (0, "((nor p) p)")
    code, out, _ = nl(capsys, "parse", "-e", "~p", "--prelude", PRELUDE, "--resugar")
    assert (code, out.strip()) == (0, "~p")


def test_parse_reads_file(tmp_path, capsys):
    src = tmp_path / "t.nl"
    src.write_text("p \\/ q\n")
    code, out, _ = nl(capsys, "parse", str(src), "--prelude", PRELUDE, "--resugar")
    assert (code, out.strip()) == (0, "p \\/ q")


def test_missing_file_exits_two(tmp_path, capsys):
    code, _, _ = nl(capsys, "parse", str(tmp_path / "nope.nl"), "--prelude", "empty")
    assert code == 2


def test_reduce(capsys):
    code, out, _ = nl(capsys, "reduce", "-e", "(\\x:o. x) p", "--prelude", PRELUDE)
    assert (code, out.strip()) == (0, "p")


def test_reduce_out_of_fuel_exits_one(capsys):
    code, _, err = nl(capsys, "reduce", "-e", "3", "--prelude", "empty", "--fuel", "5")
    assert code == 1
    assert "fuel" in err


def test_reduce_strategies_agree(capsys):
    outs = [nl(capsys, "reduce", "-e", "1", "--prelude", "empty", "--strategy", s)[1]
            for s in ("lo", "ri")]
    assert outs[0] == outs[1]


@pytest.mark.parametrize("argv", [
    [], ["frobnicate"], ["type"], ["reduce", "-e", "p", "--strategy", "xx"],
    ["check"], ["prove", "p |- p", "--depth", "zero"],
])
def test_usage_errors_exit_two(capsys, argv):
    assert nl(capsys, *argv)[0] == 2


# -- check

@pytest.mark.parametrize("path", golden_files(), ids=base)
def test_golden_proofs_check(capsys, path):
    code, out, _ = nl(capsys, "check", path)
    assert code == 0
    assert out.splitlines()[-1] == "VALID"


@pytest.mark.parametrize("path", mutated_files(), ids=base)
def test_mutated_proofs_fail(capsys, path):
    code, out, _ = nl(capsys, "check", path)
    assert code == 1
    assert out.splitlines()[-1] == "INVALID"
    assert "FAIL" in out


def test_broken_axiom_reports_node_path(capsys):
    path = os.path.join(ROOT, "mutated", "p_right_axiom_broken.json")
    code, out, _ = nl(capsys, "check", path, "--report", "json")
    report = json.loads(out)
    assert code == 1 and report["valid"] is False
    failing = [n for n in report["nodes"] if not n["ok"]]
    assert failing and all(isinstance(n["path"], list) for n in failing)


def test_mode_override(capsys):
    path = os.path.join(GOLDEN_DIR, "excluded_middle.json")
    assert nl(capsys, "check", path)[0] == 0
    code, out, _ = nl(capsys, "check", path, "--mode", "strict")
    assert code == 1 and "ModeForbidden" in out


@pytest.mark.parametrize("path", golden_files() + mutated_files(), ids=base)
def test_json_report_schema_and_determinism(capsys, path):
    _, first, _ = nl(capsys, "check", path, "--report", "json")
    _, second, _ = nl(capsys, "check", path, "--report", "json")
    assert first == second
    jsonschema.validate(json.loads(first), SCHEMA)


def test_malformed_proof_file_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert nl(capsys, "check", str(bad))[0] == 2
    bad.write_text(json.dumps({"mode": "strict"}))
    assert nl(capsys, "check", str(bad))[0] == 2
    bad.write_text(json.dumps({"root": {"sequent": {"left": ["p"], "right": ["p"]},
                                        "rule": {"name": "Cut"}, "premises": []}}))
    assert nl(capsys, "check", str(bad))[0] == 2


# -- prove

def test_prove_not_found_exits_one(capsys):
    code, out, _ = nl(capsys, "prove", "|- p \\/ ~p", "--prelude", PRELUDE, "--depth", "4")
    assert code == 1 and "not found" in out


def test_prove_ill_formed_goal_exits_one(capsys):
    assert nl(capsys, "prove", "t |- t", "--prelude", PRELUDE)[0] == 1


def test_prove_prints_proof(capsys):
    code, out, _ = nl(capsys, "prove", "p |- p", "--prelude", PRELUDE)
    assert code == 0
    assert json.loads(out)["root"]["rule"]["name"] == "S"


SEQUENTS = ["p |- p", "|- p, q, nor p q", "nex f, f t |-", "|- 0 = 0 <-> 0 .= 0",
            "nor p q |- p, q", "q, p |- p", "|- p \\/ ~p", "p |- q", "~p, p |-",
            "nex g, g t |- p", "nex f |- nex f"]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SEQUENTS), st.sampled_from(["strict", "paper"]), st.integers(1, 6))
def test_prove_emit_then_check(sequent, mode, depth):
    import tempfile
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "proof.json")
        code = run(["prove", sequent, "--prelude", PRELUDE, "--mode", mode,
                    "--depth", str(depth), "--nodes", "20000", "--emit", out])
        assert code in (0, 1)
        if code == 0:
            assert run(["check", out]) == 0


def test_emitted_prelude_path_is_relative(tmp_path):
    out = tmp_path / "sub" / "proof.json"
    out.parent.mkdir()
    assert run(["prove", "p |- p", "--prelude", PRELUDE, "--emit", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert not os.path.isabs(doc["prelude"])
    moved = tmp_path / "elsewhere"
    shutil.copytree(tmp_path / "sub", moved / "sub")
    assert run(["check", str(moved / "sub" / "proof.json")]) == 2  # prelude no longer beside it


def test_console_script():
    exe = shutil.which("nl")
    cmd = [exe] if exe else [sys.executable, "-m", "nlogic.cli"]
    res = subprocess.run(cmd + ["type", "-e", "0", "--prelude", "empty"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.split() == ["i", "o", "i"]
