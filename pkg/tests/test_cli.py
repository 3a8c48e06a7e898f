import json
import subprocess
import sys
from pathlib import Path

import pytest

from delayba.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_exit_codes(capsys):
    code, out, _ = run(capsys, "validate", FIXTURES / "example1.json")
    assert code == 0 and "URs=9" in out and "component beams=10" in out
    code, out, _ = run(capsys, "validate", FIXTURES / "missing_prefix.json")
    assert code == 1 and "level 4, prefix '1'" in out
    code, _, err = run(capsys, "validate", FIXTURES / "noncontiguous.json")
    assert code == 2 and "parse error" in err
    code, _, _ = run(capsys, "validate", FIXTURES / "does_not_exist.json")
    assert code == 2


def test_maxcard(capsys):
    assert run(capsys, "maxcard", 4, 3)[1].strip() == "b=4 d=3 bound=10"
    code, out, _ = run(capsys, "maxcard", 4, 3, "--bruteforce", 12)
    assert code == 0 and "oracle=10 gap=0" in out
    code, out, _ = run(capsys, "maxcard", 5, 3, "--bruteforce", 96, "--budget", 5)
    assert code == 3 and "budget-exceeded" in out


def test_simulate(capsys):
    code, out, _ = run(capsys, "simulate", FIXTURES / "example1.json", "-n", 2000)
    assert code == 0 and "1/8 turn" in out and "monte carlo" in out
    code, out, _ = run(capsys, "simulate", FIXTURES / "bisection5.json", "-n", 0,
                       "--prior", FIXTURES / "two_piece_prior.json")
    assert "1/32 turn" in out and "monte carlo" not in out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", FIXTURES / "example1.json")
    assert code == 0
    assert out.splitlines()[-1] == "# loop: 1100 1000 1001 1000 1010 0010 0011 0111 0110 0100"
    code, out, _ = run(capsys, "enumerate", FIXTURES / "example1.json", "--format", "json")
    doc = json.loads(out)
    assert len(doc["regions"]) == 9 and doc["loop"]["d"] == 3


def test_figure2_rows(capsys):
    code, out, _ = run(capsys, "figure2", "--d-max", 8, "--methods", "bisection,modified-exhaustive")
    assert code == 0
    lines = [x for x in out.splitlines() if not x.startswith("# note")]
    assert lines[0].startswith("# config: ")
    assert lines[1] == "method,d,b,total_slots,achieved_width_turns,achieved_width_degrees"
    assert lines[2] == "bisection,1,5,6,0.03125,11.25"
    assert "bisection,8,5,41,0.03125,11.25" in lines
    assert "modified-exhaustive,8,31,39,0.03125,11.25" in lines


def test_figure2_is_byte_stable(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"target": "45/4", "degrees": True, "d_max": 12}))
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "figure2", "--config", cfg, "--out", a)[0] == 0
    assert run(capsys, "figure2", "--config", cfg, "--out", b)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert "lower-bound,1,5,6," in a.read_text()
    assert "# note: non-interactive rows with b > d (d=1,2,3,4,5,6,7,8,9,10,11,12)" in a.read_text()


@pytest.mark.parametrize("argv,code", [
    (["figure2", "--methods", "nope"], 2),
    (["figure2", "--target", "2"], 2),
    (["figure2", "--d-min", "0"], 2),
    (["figure2", "--target", "1/100000", "--b-cap", "8"], 3),
])
def test_figure2_errors(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_bad_config_key(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"colour": "red"}))
    assert run(capsys, "figure2", "--config", cfg)[0] == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "delayba", "maxcard", "5", "1"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "bound=32" in out.stdout
