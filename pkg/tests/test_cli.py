import json
import subprocess
import sys


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "tcsurf", *args],
                          capture_output=True, text=True, timeout=300)
    return proc


def test_build_table_output():
    proc = run_cli("build", "--model", "totaro", "--g", "1", "--n", "2")
    assert proc.returncode == 0
    assert "hilbert series: [1, 4, 5, 2]" in proc.stdout


def test_build_json_and_presentation_round_trip(tmp_path):
    path = tmp_path / "sigma2.json"
    proc = run_cli("build", "--model", "surface", "--g", "2",
                   "--dump-presentation", str(path), "--json")
    assert proc.returncode == 0
    info = json.loads(proc.stdout)
    assert info["hilbert"] == [1, 4, 1]
    assert path.exists()

    again = run_cli("build", "--presentation", str(path), "--json")
    assert again.returncode == 0
    assert json.loads(again.stdout)["hilbert"] == [1, 4, 1]


def test_zcl_exact_json():
    proc = run_cli("zcl", "--model", "so3-mod2", "--json")
    assert proc.returncode == 0
    rep = json.loads(proc.stdout)
    assert rep["quantity"] == "zcl"
    assert rep["value"] == 3
    assert rep["exact"] is True


def test_zcl_certificate_json():
    proc = run_cli("zcl", "--model", "totaro", "--g", "1", "--n", "2",
                   "--method", "certificate", "--json")
    assert proc.returncode == 0
    rep = json.loads(proc.stdout)
    assert rep["value"] == 4
    assert rep["exact"] is False
    assert len(rep["factors"]) == 4
    assert rep["witness"] == ["b1*b2", "a1*a2"]


def test_zcl_certificate_climb_with_cap():
    proc = run_cli("zcl", "--model", "arnold", "--n", "3",
                   "--method", "certificate", "--cap", "2", "--json")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == 2  # capped below the true 3


def test_groebner_check_json():
    proc = run_cli("groebner-check", "--model", "torus-ideal", "--n", "2",
                   "--json")
    assert proc.returncode == 0
    rep = json.loads(proc.stdout)
    assert rep["is_groebner"] is True
    assert rep["hilbert"] == [1, 4, 5, 2]
    assert rep["order"] == "x2 < y2 < x1 < y1"


def test_groebner_check_reversed_order():
    proc = run_cli("groebner-check", "--n", "3", "--order", "reversed")
    assert proc.returncode == 0
    assert "is_groebner: True" in proc.stdout


def test_tc_single_row_json():
    proc = run_cli("tc", "--g", "2", "--n", "2", "--json")
    assert proc.returncode == 0
    rows = json.loads(proc.stdout)
    assert rows[0]["status"] == "tight"
    assert rows[0]["lower"] == rows[0]["upper"] == 7


def test_tc_sweep_exit_code_and_table():
    proc = run_cli("tc", "--sweep", "1", "2", "0")
    assert proc.returncode == 0
    lines = [l for l in proc.stdout.splitlines() if l.strip()]
    assert len(lines) == 4
    assert all("tight" in l for l in lines)


def test_tc_sweep_with_unverified_rows_still_exits_zero():
    proc = run_cli("tc", "--sweep", "1", "1", "1")
    assert proc.returncode == 0
    assert "unverified" in proc.stdout


def test_tc_requires_n():
    proc = run_cli("tc")
    assert proc.returncode == 2
    assert "error" in proc.stderr.lower()


def test_unknown_model_token_is_a_usage_error():
    proc = run_cli("build", "--model", "mystery")
    assert proc.returncode == 2


def test_console_script_entry_point():
    proc = subprocess.run(["tcsurf", "tc", "--g", "0", "--n", "1"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert "tight" in proc.stdout
