import hashlib
import json
import subprocess
import sys

import pytest

from latkit.cli import main
from latkit.lattice import Lattice

from conftest import named


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def lat_file(tmp_path):
    p = tmp_path / "a2.json"
    p.write_text(json.dumps(named("A2").to_json()))
    return p


def test_snf(capsys, lat_file):
    rc, out, _ = run(capsys, "snf", "--file", str(lat_file))
    data = json.loads(out)
    assert rc == 0 and data["divisors"] == [1, 3] and data["det"] == 3
    digest = hashlib.sha256(lat_file.read_bytes()).hexdigest()
    assert data["input_sha256"][str(lat_file)] == digest


def test_shortvec(capsys, lat_file):
    rc, out, _ = run(capsys, "shortvec", "--file", str(lat_file), "--norm", "2", "--ambient")
    data = json.loads(out)
    assert rc == 0 and data["count"] == 6 and len(data["ambient"]) == 6


def test_shortvec_rational_norm(capsys, tmp_path):
    from latkit.lattice import dual
    p = tmp_path / "dual.json"
    p.write_text(json.dumps(dual(named("A2")).to_json()))
    rc, out, _ = run(capsys, "shortvec", "--file", str(p), "--norm", "2/3")
    assert rc == 0 and json.loads(out)["count"] == 6


def test_atlas(capsys):
    rc, out, _ = run(capsys, "atlas", "E8")
    cert = json.loads(out)["certificate"]
    assert rc == 0 and cert["det"] == 1 and cert["min_norm"] == 2
    rc, out, _ = run(capsys, "atlas", "--pretty", "K12")
    assert rc == 0 and "certificate.det" in out


def test_case_emit_then_classify(capsys, tmp_path):
    p = tmp_path / "pair.json"
    rc, out, _ = run(capsys, "case", "dih6_16", "--emit", str(p))
    assert rc == 0 and json.loads(out)["sha256"] == hashlib.sha256(p.read_bytes()).hexdigest()
    rc, out, _ = run(capsys, "classify", "--pair", str(p))
    rep = json.loads(out)
    assert rc == 0 and rep["product_order"] == 3 and rep["smith"] == [1] * 8 + [3] * 8
    assert str(p) in rep["input_sha256"]


def test_verify_case_pass_and_fail(capsys):
    rc, out, _ = run(capsys, "verify", "--case", "dih10_16")
    assert rc == 0 and json.loads(out)["pass"]
    rc, out, _ = run(capsys, "verify", "--case", "dih8_16_dd4")
    assert rc == 1 and not json.loads(out)["pass"]


def test_leech_octads(capsys):
    rc, out, _ = run(capsys, "leech", "--octads")
    data = json.loads(out)
    assert rc == 0 and data["count"] == 759
    assert data["fixed"]["O1"] == list(range(1, 9))
    assert all(len(o) == 8 and min(o) >= 1 and max(o) <= 24 for o in data["octads"])


def test_leech_summary(capsys):
    rc, out, _ = run(capsys, "leech")
    data = json.loads(out)
    assert rc == 0 and data["det"] == 1 and data["rank"] == 24


@pytest.mark.parametrize("argv", [
    ["verify"],
    ["verify", "--all", "--case", "dih4_12"],
    ["verify", "--case", "nope"],
    ["atlas", "Q9"],
    ["case", "dih99"],
    ["snf", "--file", "/nonexistent.json"],
    ["shortvec", "--file", "/nonexistent.json", "--norm", "2"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    rc, _, _ = run(capsys, *argv)
    assert rc == 2


def test_bad_inputs(capsys, tmp_path, lat_file):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "snf", "--file", str(bad))[0] == 2
    dep = tmp_path / "dep.json"
    dep.write_text(json.dumps({"ambient_dim": 2, "form": {"kind": "scaled_identity", "num": 1, "den": 1},
                               "basis": [[1, 0], [2, 0]]}))
    assert run(capsys, "snf", "--file", str(dep))[0] == 2
    assert run(capsys, "shortvec", "--file", str(lat_file), "--norm", "x")[0] == 2
    assert run(capsys, "shortvec", "--file", str(lat_file), "--norm", "-1")[0] == 2
    pair = tmp_path / "pair.json"
    pair.write_text(json.dumps({"M": named("A2").to_json()}))
    assert run(capsys, "classify", "--pair", str(pair))[0] == 2


def test_nonintegral_snf(capsys, tmp_path):
    from latkit.lattice import dual
    p = tmp_path / "d.json"
    p.write_text(json.dumps(dual(named("A2")).to_json()))
    assert run(capsys, "snf", "--file", str(p))[0] == 2


def test_console_script_exit_code():
    proc = subprocess.run([sys.executable, "-m", "latkit.cli", "atlas", "nope"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "error" in proc.stderr
