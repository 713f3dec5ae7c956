"""CLI contract: subcommands, exit codes, determinism, input errors."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from kanforge.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_snf_pass(capsys):
    code, out, _ = run_cli(["snf", str(DATA / "matrix_plain.json")], capsys)
    assert code == 0 and "snf-decomposition" in out


def test_dual_chain_pass(capsys):
    code, out, _ = run_cli(["dual", str(DATA / "chain_times2.json")], capsys)
    assert code == 0
    assert "snake" in out


def test_dual_torsion_absent_is_exit_zero(capsys):
    code, out, _ = run_cli(["dual", str(DATA / "torsion_chain.json")], capsys)
    assert code == 0
    assert "no dual: component Z/3 not projective" in out


def test_check_comonad_identity_pass(capsys):
    code, _, _ = run_cli(["check-comonad", str(DATA / "identity_comonad.json")],
                         capsys)
    assert code == 0


def test_check_comonad_zero_fails(capsys):
    code, out, _ = run_cli(["check-comonad", str(DATA / "zero_comonad_line.json")],
                           capsys)
    assert code == 1
    assert "unit map fails the counit law" in out


def test_em_and_hopf_and_createkan(capsys):
    for cmd in ("em", "check-hopf", "verify-createkan"):
        code, _, _ = run_cli([cmd, str(DATA / "interior_sierpinski.json")], capsys)
        assert code == 0, cmd


def test_lan_absent_is_exit_zero(capsys):
    code, out, _ = run_cli(
        ["lan", str(DATA / "interior_sierpinski.json"), "o0"], capsys)
    assert code == 0 and "no dual" in out


def test_fusion_concrete(capsys):
    code, out, _ = run_cli(["fusion", str(DATA / "chain_times2.json"),
                            str(DATA / "chain_times2.json")], capsys)
    assert code == 0 and "fusion-two-sided-inverse" in out


def test_tensor_chain(capsys):
    code, out, _ = run_cli(["tensor", str(DATA / "chain_times2.json"),
                            str(DATA / "chain_times2.json")], capsys)
    assert code == 0 and "differential" in out


def test_check_coalgebra_chain(capsys):
    code, _, _ = run_cli(["check-coalgebra", str(DATA / "chain_times2.json")],
                         capsys)
    assert code == 0


def test_corollary_sweep_deterministic(capsys):
    code1, out1, _ = run_cli(["corollary-sweep", "--seed", "3", "--json"], capsys)
    code2, out2, _ = run_cli(["corollary-sweep", "--seed", "3", "--json"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical for identical seed


def test_missing_file_is_exit_two(capsys):
    code, _, err = run_cli(["dual", "no_such_file.json"], capsys)
    assert code == 2 and "no_such_file.json" in err


def test_malformed_json_is_exit_two(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{ not json")
    code, _, err = run_cli(["snf", str(p)], capsys)
    assert code == 2 and "line 1" in err


def test_generate_corpus_and_refusal(tmp_path, capsys):
    code, out, _ = run_cli(["generate-corpus", "topologies", "--points", "2",
                            "--out", str(tmp_path / "t")], capsys)
    assert code == 0
    assert len(list((tmp_path / "t").glob("*.json"))) == 4
    code, _, err = run_cli(
        ["generate-corpus", "free-complexes", "--support", "0", "1", "2", "3",
         "--max-rank", "3", "--bound", "4", "--max-size", "10",
         "--out", str(tmp_path / "f")], capsys)
    assert code == 2 and "refusing" in err


def test_merge_verdicts(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps({"verdicts": [
        {"name": "x", "status": "pass", "details": [], "counters": {}}]}))
    b.write_text(json.dumps({"verdicts": [
        {"name": "y", "status": "fail", "details": ["why"], "counters": {}}]}))
    code, out, _ = run_cli(["merge", str(a)], capsys)
    assert code == 0 and "1/1" in out
    code, out, _ = run_cli(["merge", str(a), str(b)], capsys)
    assert code == 1 and "y" in out
    code, out, _ = run_cli(["merge"], capsys)
    assert code == 0 and "0/0" in out


def test_console_script_installed():
    proc = subprocess.run([sys.executable, "-m", "kanforge.cli", "snf",
                           str(DATA / "matrix_3x3.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0


def test_env_seed_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("KANFORGE_SEED", "77")
    code1, out1, _ = run_cli(["corollary-sweep", "--json"], capsys)
    monkeypatch.setenv("KANFORGE_SEED", "78")
    code2, out2, _ = run_cli(["corollary-sweep", "--json"], capsys)
    assert code1 == code2 == 0
