import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from toricpairs.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_fan_validate():
    code, out, _ = run("fan", "validate", DATA / "p2.json")
    assert code == 0 and "picard_rank: 1" in out and "intersection_matrix" in out


def test_fan_validate_non_primitive():
    code, out, _ = run("fan", "validate", DATA / "nonprimitive.json")
    assert code == 1 and "ray 0 not primitive" in out


def test_fan_validate_truncated_json():
    code, _, err = run("fan", "validate", DATA / "truncated.json")
    assert code == 2 and "malformed JSON" in err


def test_missing_file_and_bad_structure(tmp_path):
    assert run("fan", "validate", tmp_path / "nope.json")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"rays": [[1, 0], [0, "x"]]}')
    assert run("fan", "validate", bad)[0] == 2
    bad.write_text('[1, 2]')
    assert run("fan", "validate", bad)[0] == 2


def test_fan_info():
    code, out, _ = run("fan", "info", DATA / "f1.json")
    assert code == 0
    assert "canonical_key: [-1, 0, 1, 0]" in out and "del_pezzo: yes" in out


def test_pair_classify_tables():
    code, out, _ = run("pair", "classify", DATA / "f1.json")
    assert code == 0 and "16 pairs, 5 ample" in out
    rows = [line for line in out.splitlines()[2:]]
    assert len(rows) == 16 and sum(r.startswith("*") for r in rows) == 5
    code, out, _ = run("pair", "classify", DATA / "p2.json")
    assert "8 pairs, 7 ample" in out


def test_pair_classify_seven_rays_json_and_csv():
    code, out, _ = run("pair", "classify", DATA / "seven_rays.json", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["records"]) == 128
    assert [r["delta"] for r in doc["records"] if r["ample"]] in ([], [[]])
    assert all(r["witness"] is not None for r in doc["records"][1:])
    code, out, _ = run("pair", "classify", DATA / "seven_rays.json", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "fan,delta,ample,kleiman,witness" and len(lines) == 129


def test_verify_commands():
    code, out, _ = run("verify", "t2")
    assert code == 0 and "PASS" in out
    code, out, _ = run("verify", "t3", "--r-max", "20")
    assert code == 0 and "0..20" in out
    code, out, _ = run("verify", "t1", "--rays", "5,6,7", "--gamma-bound", "6")
    assert code == 0 and "fans examined: 56" in out and "gamma bound: 6" in out
    code, out, _ = run("verify", "volumes", "--samples", "40", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "PASS"


def test_verify_t1_rejects_small_rays():
    assert run("verify", "t1", "--rays", "4,5")[0] == 2


def test_enumerate():
    assert run("fan", "enumerate", "--rays", 3, "--gamma-bound", 3)[1] == "(-1,-1,-1)\n"
    code, out, _ = run("fan", "enumerate", "--rays", 4, "--gamma-bound", 2)
    assert out.split() == ["(-2,0,2,0)", "(-1,0,1,0)", "(0,0,0,0)"]
    assert run("fan", "enumerate", "--rays", 4, "--gamma-bound", 0)[1] == "(0,0,0,0)\n"
    doc = json.loads(run("fan", "enumerate", "--rays", 5, "--gamma-bound", 6, "--format", "json")[1])
    assert len(doc["fans"]) == 6 and doc["bound"] == 6


def test_draw_golden(tmp_path):
    out_svg = tmp_path / "p2.svg"
    assert run("draw", DATA / "p2.json", "--coeffs", "1,1,1", "--out", out_svg)[0] == 0
    text = out_svg.read_text()
    assert text == (GOLDEN / "p2_anticanonical.svg").read_text()
    assert text.count('class="ray"') == 3 and text.count('class="vertex"') == 3
    for i in range(3):
        assert f'm<tspan font-size="10" dy="4">{i}</tspan>' in text


def test_draw_fan_only_golden(tmp_path):
    out_svg = tmp_path / "f2.svg"
    assert run("draw", DATA / "f2.json", "--out", out_svg)[0] == 0
    text = out_svg.read_text()
    assert text == (GOLDEN / "f2_fan.svg").read_text()
    assert text.count('class="ray"') == 4 and "polygon" not in text


def test_draw_rejects_non_ample(tmp_path):
    code, _, err = run("draw", DATA / "p2.json", "--coeffs", "0,0,0", "--out", tmp_path / "x.svg")
    assert code == 1 and "not ample" in err
    assert not (tmp_path / "x.svg").exists()


def test_outputs_are_deterministic():
    a = run("pair", "classify", DATA / "f2.json", "--format", "json")
    b = run("pair", "classify", DATA / "f2.json", "--format", "json")
    assert a == b


def test_usage_errors_exit_2():
    assert run()[0] == 2
    assert run("verify", "t9")[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "toricpairs.cli", "verify", "t2"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "PASS" in proc.stdout
