"""Command-line interface: exit codes, JSON artifacts, determinism."""

import json
import subprocess
import sys

import pytest

from superform.cli import main


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_writes_json(tmp_path, capsys):
    out = tmp_path / "g.json"
    code, stdout, _ = run(
        ["build", "--family", "g", "--sigma", "1,1,-2", "--out", str(out)], capsys)
    assert code == 0
    assert "9|8" in stdout
    data = json.loads(out.read_text())
    assert sorted(data.keys()) == ["basis", "brackets", "context", "name"]
    assert len(data["basis"]) == 17


def test_build_no_out_writes_nothing(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, _ = run(["build", "--family", "gp", "--sigma", "2,3,-5"], capsys)
    assert code == 0
    assert list(tmp_path.iterdir()) == []


def test_build_symbolic(capsys):
    code, stdout, _ = run(["build", "--family", "ghat", "--symbolic"], capsys)
    assert code == 0
    assert "symbolic" in stdout


def test_jacobi_pass(capsys):
    code, stdout, _ = run(["jacobi", "--family", "gpp", "--sigma", "1,-3,2"], capsys)
    assert code == 0
    assert "hold" in stdout


def test_jacobi_symbolic_kaplansky(capsys):
    code, _, _ = run(["jacobi", "--kaplansky", "--symbolic"], capsys)
    assert code == 0


def test_jacobi_off_plane_fails_with_witness(tmp_path, capsys):
    out = tmp_path / "j.json"
    code, stdout, _ = run(
        ["jacobi", "--family", "g", "--sigma-sum-nonzero", "1,1,-1",
         "--kaplansky", "--out", str(out)], capsys)
    assert code == 1
    assert "FAILED at triple" in stdout
    data = json.loads(out.read_text())
    assert data["ok"] is False
    assert isinstance(data["witness"], list) and len(data["witness"]) == 3


def test_jacobi_sum_zero_rejected(capsys):
    code, _, stderr = run(["jacobi", "--sigma-sum-nonzero", "1,-1,0"], capsys)
    assert code == 2
    assert "nonzero sum" in stderr


def test_jacobi_both_sigma_flags_rejected(capsys):
    code, _, stderr = run(
        ["jacobi", "--sigma", "1,1,-2", "--sigma-sum-nonzero", "1,1,-1"], capsys)
    assert code == 2
    assert "only one" in stderr


def test_bad_sigma_string_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--family", "g", "--sigma", "1,x"])
    assert exc.value.code == 2


def test_unknown_family_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build", "--family", "nope", "--sigma", "1,1,-2"])
    assert exc.value.code == 2


def test_analyze_json_shape(tmp_path, capsys):
    out = tmp_path / "a.json"
    code, stdout, _ = run(
        ["analyze", "--family", "gp", "--sigma", "0,1,-1", "--out", str(out)], capsys)
    assert code == 0
    assert "case one_zero" in stdout
    data = json.loads(out.read_text())
    assert sorted(data.keys()) == [
        "case", "claims", "family", "ok", "sigma", "zero_positions"]
    assert data["family"] == "gp"
    assert data["case"] == "one_zero"
    assert data["sigma"] == "0,1,-1"
    assert all(sorted(c.keys()) == ["data", "name", "status"] for c in data["claims"])
    assert all(c["status"] == "ok" for c in data["claims"])


def test_analyze_generic(capsys):
    code, stdout, _ = run(["analyze", "--family", "ghatp", "--sigma", "1,1,-2"], capsys)
    assert code == 0
    assert "case generic" in stdout
    assert "simple" in stdout


def test_kac_check(tmp_path, capsys):
    out = tmp_path / "k.json"
    code, stdout, _ = run(["kac-check", "--sigma", "1,0,-1", "--out", str(out)], capsys)
    assert code == 0
    data = json.loads(out.read_text())
    assert data["ok"] is True
    assert data["quartic_is_zero"] is True
    assert len(data["checks"]) == 11


def test_kac_check_symbolic(capsys):
    code, _, _ = run(["kac-check", "--symbolic"], capsys)
    assert code == 0


def test_iso_check(tmp_path, capsys):
    out = tmp_path / "i.json"
    code, stdout, _ = run(
        ["iso-check", "--family", "ghat", "--sigma", "1,1,-2", "--seed", "3",
         "--out", str(out)], capsys)
    assert code == 0
    assert "composition_law          ok" in stdout
    data = json.loads(out.read_text())
    assert data["ok"] is True
    assert len(data["results"]) == 19


def test_iso_check_default_sigma(capsys):
    code, _, _ = run(["iso-check"], capsys)
    assert code == 0


def test_group_check(tmp_path, capsys):
    out = tmp_path / "grp.json"
    code, stdout, _ = run(
        ["group-check", "--family", "gpp", "--sigma", "1,-3,2", "--q", "2",
         "--seed", "4", "--out", str(out)], capsys)
    assert code == 0
    assert "218 ok, 0 failed, 0 skipped" in stdout
    data = json.loads(out.read_text())
    assert data["ok"] is True
    assert data["structure"] is None
    assert sorted(data["sample_element"].keys()) == [
        "ad", "central", "kind", "odd", "q", "sigma"]
    assert data["presentation"]["failures"] == []
    assert all(flag for _, flag in data["engine"]["checks"])


def test_group_check_degenerate_skips_and_structure(capsys):
    code, stdout, _ = run(
        ["group-check", "--family", "ghat", "--sigma", "0,0,0", "--q", "2",
         "--seed", "1"], capsys)
    assert code == 0
    assert "skipped product.h" in stdout
    assert "structure all_pairs_commute" in stdout


def test_group_check_nonintegral_sigma_exits_2(capsys):
    code, _, stderr = run(
        ["group-check", "--family", "g", "--sigma", "1/2,1,-3/2", "--q", "2"], capsys)
    assert code == 2
    assert "integral" in stderr


def test_json_bytes_deterministic_for_same_seed(tmp_path, capsys):
    paths = [tmp_path / "r1.json", tmp_path / "r2.json"]
    for path in paths:
        code, _, _ = run(
            ["group-check", "--family", "g", "--sigma", "1,1,-2", "--q", "2",
             "--seed", "9", "--out", str(path)], capsys)
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_iso_json_differs_across_seeds_only_in_seed_field(tmp_path, capsys):
    paths = [tmp_path / "s3.json", tmp_path / "s4.json"]
    for seed, path in zip(("3", "3"), paths):
        run(["iso-check", "--seed", seed, "--out", str(path)], capsys)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_subprocess_entry_point(tmp_path):
    out = tmp_path / "a.json"
    proc = subprocess.run(
        [sys.executable, "-m", "superform.cli", "analyze", "--family", "g",
         "--sigma", "0,1,-1", "--out", str(out)],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "case one_zero" in proc.stdout
    data = json.loads(out.read_text())
    assert data["case"] == "one_zero"


def test_subprocess_console_script():
    proc = subprocess.run(
        ["superform", "jacobi", "--family", "g", "--sigma", "2,3,-5"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "hold" in proc.stdout
