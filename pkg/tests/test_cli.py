import io
import json
import subprocess
import sys
from contextlib import redirect_stdout

import pytest

from isingsym.cli import main


def run_main(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def test_tables_I_passes():
    code, out = run_main("tables", "--which", "I", "--theta", "0.7")
    assert code == 0
    header, *rows = out.strip().split("\n")
    assert header.startswith("table,state,theta,m,")
    assert len(rows) == 4 * 4  # 4 states x 4 coefficients
    dev = float(rows[0].split(",")[-1])
    assert dev < 1e-9


def test_tables_II_grid_passes():
    code, out = run_main("tables", "--which", "II")
    assert code == 0
    rows = out.strip().split("\n")[1:]
    assert len(rows) == 5 * 64 * 5
    assert all(float(r.split(",")[-1]) < 1e-9 for r in rows)


def test_tables_json_format():
    code, out = run_main("tables", "--which", "I", "--theta", "0.3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 4
    assert payload[0]["deviation"] < 1e-9


def test_leakage_csv_shape_and_values():
    code, out = run_main("leakage", "--n", "4", "--theta", "3.141592653589793")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "state,theta,leakage"
    body = lines[1:6]
    assert len(body) == 5
    summary_at = lines.index("state,max_leakage,retained")
    summary = lines[summary_at + 1 :]
    verdicts = [row.split(",")[2] for row in summary]
    assert verdicts == ["False", "True", "False", "True", "False"]


def test_leakage_deterministic():
    a = run_main("leakage", "--n", "5")
    b = run_main("leakage", "--n", "5")
    assert a == b


def test_leakage_json():
    code, out = run_main("leakage", "--n", "3", "--steps", "8", "--theta-min", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert all(s["retained"] for s in payload["states"])


def test_invariant_dimensions():
    for n, dim in ((2, 3), (3, 4), (4, 4), (5, 4), (6, 4)):
        code, out = run_main("invariant", "--n", str(n))
        assert code == 0
        assert out.split("\n")[0] == f"dimension,{dim}"


def test_commutators_csv():
    code, out = run_main("commutators", "--n", "4")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "pair,frobenius_norm"
    values = dict(line.split(",") for line in lines[1:])
    assert float(values["A_Jx"]) <= 1e-12
    assert float(values["A_J2"]) == pytest.approx(4.0, abs=1e-10)
    code3, out3 = run_main("commutators", "--n", "3")
    vals3 = dict(line.split(",") for line in out3.strip().split("\n")[1:])
    assert float(vals3["A_J2"]) <= 1e-12


def test_squeeze_coherent():
    code, out = run_main("squeeze", "--n", "4", "--state", "basis:0000", "--theta", "0")
    assert code == 0
    assert float(out.strip().split("\n")[1]) == pytest.approx(1.0, abs=1e-12)


def test_squeeze_dicke_halves():
    code, out = run_main("squeeze", "--n", "5", "--state", "dicke:5/2", "--theta", "0.4")
    assert code == 0
    assert float(out.strip().split("\n")[1]) > 0.0


def test_squeeze_degenerate_exit4():
    code, _ = run_main("squeeze", "--n", "2", "--state", "dicke:0")
    assert code == 4


def test_resource_cap_exit3():
    code, _ = run_main("leakage", "--n", "11", "--model", "xyz", "--cz", "2", "--theta", "0.1")
    assert code == 3


def test_usage_errors_exit1():
    assert run_main("leakage")[0] == 1  # missing --n
    assert run_main("nonsense")[0] == 1
    assert run_main("squeeze", "--n", "3", "--state", "foo:1")[0] == 1
    assert run_main("squeeze", "--n", "3", "--state", "dicke:0.37")[0] == 1
    assert run_main("leakage", "--n", "4", "--theta-min", "0", "--steps", "0")[0] == 1


def test_out_file(tmp_path):
    path = tmp_path / "out.csv"
    code, out = run_main("commutators", "--n", "3", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("pair,frobenius_norm")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "isingsym", "invariant", "--n", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("dimension,4")


def test_seventeen_digit_format():
    _, out = run_main("leakage", "--n", "2", "--theta", "0.1")
    theta_field = out.split("\n")[1].split(",")[1]
    assert theta_field == "0.10000000000000001"
