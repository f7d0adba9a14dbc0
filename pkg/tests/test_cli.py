from __future__ import annotations

import json
import subprocess
import sys

from g2torsion.report.cli import main


def run(*args):
    return subprocess.run([sys.executable, "-m", "g2torsion", *args], capture_output=True, text=True, timeout=300)


def test_verify_filter_json():
    out = run("verify", "--filter", "C02-tor-su3", "--format", "json")
    assert out.returncode == 0, out.stderr
    ids = [r["id"] for r in json.loads(out.stdout)["claims"]]
    assert ids == ["C02-tor-su3", "C02-tor-su3-lines"]


def test_verify_refutation_exit_code():
    out = run("verify", "--filter", "C08-r1-r")
    assert out.returncode == 1
    assert out.stdout.startswith("refuted")


def test_verify_no_match(capsys):
    assert main(["verify", "--filter", "nothing"]) == 2
    assert "no claims" in capsys.readouterr().err


def test_verify_out(tmp_path, capsys):
    path = tmp_path / "r.csv"
    assert main(["verify", "--filter", "P-clifford", "--format", "csv", "--out", str(path)]) == 0
    assert path.read_text().splitlines()[1].startswith("P-clifford,")
    assert "1 verified" in capsys.readouterr().out


def test_bad_output_path(tmp_path, capsys):
    assert main(["verify", "--filter", "P-clifford", "--out", str(tmp_path / "no" / "r.txt")]) == 2
    assert "cannot write" in capsys.readouterr().err


def test_show_commands(capsys):
    assert main(["show-subalgebra", "su2"]) == 0
    assert "invariant spinors: dim 4" in capsys.readouterr().out
    assert main(["show-torsion", "u2"]) == 0
    assert "component" in capsys.readouterr().out
    assert main(["show-bianchi", "so3_ir"]) == 0
    assert "branch: x = -14*a**2" in capsys.readouterr().out
