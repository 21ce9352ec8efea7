import json
import subprocess
import sys

import pytest

from lrnsolve.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines()]


def test_solve_seven_eleven(capsys):
    code, recs = run(capsys, "solve", "--c", "7", "--d", "11", "--n", "7")
    assert code == 0
    assert [r["kind"] for r in recs] == ["report", "solution", "value"]
    assert all(r["schema"] == 1 for r in recs)
    sol = recs[1]["payload"]
    assert (sol["x"], sol["y"], sol["m"], sol["n"]) == ("1169", "9", "0", "7")
    assert recs[2]["payload"]["completeness"] == "complete"


def test_solve_inadmissible(capsys):
    code, recs = run(capsys, "solve", "--c", "3", "--d", "5", "--n", "3")
    assert code == 2
    assert recs[0]["kind"] == "report" and recs[0]["payload"]["residue_mod4"] == "3"


def test_solve_seventy_three(capsys):
    code, recs = run(capsys, "solve", "--c", "1", "--d", "73", "--n", "6")
    sols = [r["payload"] for r in recs if r["kind"] == "solution"]
    assert code == 0 and [(s["x"], s["y"], s["m"]) for s in sols] == [("485", "7", "0")]


def test_round_trip_through_verify(capsys):
    _, recs = run(capsys, "search", "--c", "1", "--d", "73", "--y-max", "100", "--n-max", "6", "--m-max", "1")
    sols = [r["payload"] for r in recs if r["kind"] == "solution"]
    assert len(sols) == 2
    for s in sols:
        code, _ = run(capsys, "verify", *[f"--{k}={s[k]}" for k in "cdxymn"])
        assert code == 0


def test_verify_exit_codes(capsys):
    code, recs = run(capsys, "verify", "--c", "3", "--d", "7", "--x", "9", "--y", "5", "--m", "0", "--n", "3")
    assert code == 0 and recs[0]["payload"]["valid"] is True
    code, recs = run(capsys, "verify", "--c", "3", "--d", "7", "--x", "9", "--y", "5", "--m", "1", "--n", "3")
    assert code == 3 and recs[0]["payload"]["valid"] is False


def test_classnumber(capsys):
    code, recs = run(capsys, "classnumber", "--d", "77")
    assert code == 0 and recs[0]["payload"]["class_number"] == "8"
    code, _ = run(capsys, "classnumber", "--d", "12")
    assert code == 1


def test_lehmer(capsys):
    code, recs = run(capsys, "lehmer", "--a", "1", "--b", "5", "--ell", "7")
    p = recs[0]["payload"]
    assert code == 0 and p["lehmer_number"] == "13" and p["prime"] == "13"
    code, recs = run(capsys, "lehmer", "--a", "14", "--b", "-22", "--ell", "7")
    assert recs[0]["payload"]["primitive_divisor"] == "absent" and recs[0]["payload"]["in_defect_table"]
    code, _ = run(capsys, "lehmer", "--a", "2", "--b", "-6", "--ell", "7")
    assert code == 1


def test_family_cubic(capsys):
    code, recs = run(capsys, "family", "--p", "3", "--c", "1", "--u-max", "5", "--m", "0")
    sols = [r["payload"] for r in recs if r["kind"] == "solution"]
    assert code == 0
    assert [(s["coords"]["u"], s["d"], s["relaxed"]) for s in sols] == [("1", "1", False), ("3", "25", True), ("5", "73", False)]


def test_family_quintic(capsys):
    code, recs = run(capsys, "family", "--p", "5", "--k-max", "12", "--t-max", "12", "--c", "1")
    sols = {(r["payload"]["d"], r["payload"]["x"]) for r in recs if r["kind"] == "solution"}
    assert code == 0 and ("5", "19") in sols and ("2", "22") in sols


def test_compare(capsys):
    code, recs = run(capsys, "compare", "--c", "7", "--d", "11", "--n", "7")
    assert code == 0 and recs[0]["kind"] == "diff" and recs[0]["payload"]["empty"] is True


def test_malformed_flags_exit_one(capsys):
    with pytest.raises(SystemExit) as info:
        main(["solve", "--c", "x", "--d", "1", "--n", "3"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 1
    code, _ = run(capsys, "solve", "--c", "1", "--d", "1", "--n", "2")
    assert code == 1


def test_config_file_and_env(tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "bounds.json"
    cfg.write_text(json.dumps({"y_max": 20, "n_max": 14, "m_max": 2}))
    _, recs = run(capsys, "search", "--c", "7", "--d", "11", "--config", str(cfg))
    assert recs[-1]["payload"]["count"] == "2"
    monkeypatch.setenv("LRNSOLVE_CONFIG", str(cfg))
    _, recs = run(capsys, "search", "--c", "7", "--d", "11", "--y-max", "5")
    assert recs[-1]["payload"]["count"] == "1"
    cfg.write_text(json.dumps({"y_maximum": 3}))
    code, _ = run(capsys, "search", "--c", "7", "--d", "11")
    assert code == 1


def test_workers_and_big_numbers(capsys):
    code, recs = run(capsys, "search", "--c", "1", "--d", "2521", "--n", "6", "--y-max", "50", "--m-max", "0", "--workers", "2")
    sols = [r["payload"] for r in recs if r["kind"] == "solution"]
    assert code == 0 and [(s["x"], s["y"]) for s in sols] == [("97469", "41")]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lrnsolve", "classnumber", "--d", "5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["class_number"] == "2"
