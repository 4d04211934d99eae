from __future__ import annotations

import json
import shutil
import subprocess

import pytest

from kummerlab.cli import EXIT_EXTENSION, EXIT_FAILED, EXIT_INPUT, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_segre_exit_codes(capsys):
    assert run(capsys, "segre", "--preset", "fermat-i")[0] == EXIT_OK
    code, out, _ = run(capsys, "segre", "--preset", "magma-s4-raw")
    assert code == EXIT_FAILED and "residual: 16" in out and "verdict: FAIL" in out


def test_json_output(capsys):
    code, out, _ = run(capsys, "segre", "--preset", "example-48-50", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK and data["ok"] is True and data["residual"] == "0"
    assert data["params"]["a"] == "1"


def test_out_file(capsys, tmp_path):
    target = tmp_path / "r.md"
    code, out, _ = run(capsys, "aut", "--preset", "example-z5", "--out", str(target))
    assert code == EXIT_OK and out == ""
    assert "80" in target.read_text()


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "segre", "--preset", "nope")
    assert code == EXIT_INPUT and "unknown preset" in err
    assert run(capsys, "segre")[0] == EXIT_INPUT
    assert run(capsys, "segre", "--preset", "fermat-i", "--field", "Q(ii)")[0] == EXIT_INPUT
    bad = tmp_path / "p.json"
    bad.write_text(json.dumps({"params": {"a": "1+*2", "b": "0", "c": "0", "d": "0", "e": "0"}}))
    assert run(capsys, "segre", "--params", str(bad))[0] == EXIT_INPUT
    assert run(capsys, "verify-paper", "--only", "nope")[0] == EXIT_INPUT
    assert run(capsys, "classify-point", "--point", "0,0,0,0")[0] == EXIT_INPUT


def test_extension_required(capsys):
    code, _, err = run(capsys, "sheets", "--preset", "example-48-50")
    assert code == EXIT_EXTENSION and "example-48-50-s" in err


def test_classify_point(capsys):
    code, out, _ = run(capsys, "classify-point", "--point", "0,0,1,5", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK and data["orbit_length"] == 8 and data["location"] == "line 1"
    code, out, _ = run(capsys, "classify-point", "--point", "[1:2:3:5]", "--format", "json")
    assert json.loads(out)["orbit_length"] == 16


def test_geometry_commands(capsys):
    assert run(capsys, "lines")[0] == EXIT_OK
    assert run(capsys, "quadrics")[0] == EXIT_OK
    assert run(capsys, "orbits")[0] == EXIT_OK
    code, out, _ = run(capsys, "incidence")
    assert code == EXIT_FAILED and "23" in out


def test_nodes_and_recover_curve(capsys):
    assert run(capsys, "nodes", "--preset", "example-48-50-t2")[0] == EXIT_OK
    assert run(capsys, "recover-curve", "--preset", "example-48-50-t3")[0] == EXIT_OK


def test_verify_paper_subset(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "segre,groups")
    assert code == EXIT_OK and "2/2 checks passed" in out


def test_verify_paper_detects_corrupted_preset(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"fermat-i": {"field": {"cyclotomic_order": 4},
                                            "params": {"a": "1", "b": "0", "c": "0", "d": "1", "e": "-i"}}}))
    code, out, _ = run(capsys, "verify-paper", "--only", "segre", "--overrides", str(bad))
    assert code == EXIT_FAILED and "FAIL segre" in out


@pytest.mark.skipif(shutil.which("kummerlab") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["kummerlab", "segre", "--preset", "fermat-i"], capture_output=True, text=True)
    assert proc.returncode == 0 and "verdict: PASS" in proc.stdout
