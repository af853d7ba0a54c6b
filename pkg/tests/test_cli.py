import json
import subprocess
import sys

import pytest

from acbgeom.cli import EXIT_INVALID, EXIT_MALFORMED, EXIT_MISMATCH, EXIT_OK, main
from acbgeom.report import dumps


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_report_spot_values(capsys):
    code, out, _ = run(capsys, "report", "--family-lee", "2,0,-1,0", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["curvature"]["tau"] == "2"
    assert doc["norms"]["norm_nabla_phi"] == "10"
    assert doc["curvature"]["rho"][2][2] == "-2"
    assert doc["schema_version"] == "1"
    assert doc["predicates"]["isStarScalarFlat"] is True


def test_report_round_trips_byte_for_byte(capsys):
    for argv in (("--family-lee", "2,0,-1,0"), ("--family", "1/2,1,1/3,2/3"), ("--family-lee", "1,-1,1,-1")):
        _, out, _ = run(capsys, "report", *argv)
        assert dumps(json.loads(out)) == out


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--family", "1,2,2,4")
    doc = json.loads(out)
    assert code == EXIT_OK
    flags = doc["class_flags"]
    assert (flags["inF1plusF11"], flags["inF1"], flags["inF11"], flags["inF0"]) == (True, False, False, False)
    assert doc["component_params"]["theta2"] == "4"


def test_jacobi_violation_exit_2(capsys):
    code, out, _ = run(capsys, "report", "--family", "1,0,0,1")
    assert code == EXIT_INVALID
    err = json.loads(out)["error"]
    assert err["kind"] == "JacobiViolation"
    assert err["message"] == "Jacobi violated: ad-bc = 1"


def test_lee_constraint_violation_exit_2(capsys):
    code, _, err = run(capsys, "report", "--family-lee", "2,0,0,1", "--format", "text")
    assert code == EXIT_INVALID and "Jacobi violated" in err


@pytest.mark.parametrize("argv", [
    ("report", "--family", "1,2,3"),
    ("report", "--family", "1,2,x,4"),
    ("report", "--family", "1/0,0,0,0"),
    ("report", "--family-lee", "1,2,3,4", "--mode", "fast"),
    ("report",),
    ("report", "--family", "0,0,0,0", "--family-lee", "0,0,0,0"),
    ("report", "--file", "/nonexistent/path.json"),
    ("sweep", "--grid", "0:1"),
])
def test_malformed_exit_1(capsys, argv):
    try:
        code, _, _ = run(capsys, *argv)
    except SystemExit as exc:  # usage errors leave through argparse
        code = exc.code
    assert code == EXIT_MALFORMED


def test_decimal_strings_are_exact(capsys):
    _, a, _ = run(capsys, "report", "--family", "0.5,0,0,0")
    _, b, _ = run(capsys, "report", "--family", "1/2,0,0,0")
    assert json.loads(a)["curvature"] == json.loads(b)["curvature"]


def test_file_input_constants_and_antisymmetry(capsys, tmp_path):
    C = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    C[1][2][1], C[2][1][1] = "1", "-1"
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"dim": 3, "constants": C}))
    code, out, _ = run(capsys, "report", "--file", str(good))
    assert code == EXIT_OK and json.loads(out)["input"]["kind"] == "constants"

    C[2][1][1] = "1"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dim": 3, "constants": C}))
    code, out, _ = run(capsys, "report", "--file", str(bad))
    assert code == EXIT_INVALID and json.loads(out)["error"]["kind"] == "AntisymmetryViolation"


def test_file_input_family_matches_flag(capsys, tmp_path):
    f = tmp_path / "fam.json"
    f.write_text(json.dumps({"family_lee": {"theta1": "2", "theta2": "0", "omega1": "-1", "omega2": "0"}}))
    _, a, _ = run(capsys, "report", "--file", str(f))
    _, b, _ = run(capsys, "report", "--family-lee", "2,0,-1,0")
    assert json.loads(a)["curvature"] == json.loads(b)["curvature"]


def test_float_mode_writes_numbers(capsys):
    code, out, _ = run(capsys, "report", "--family-lee", "2,0,-1,0", "--mode", "float")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["curvature"]["tau"] == pytest.approx(2.0)
    assert isinstance(doc["norms"]["norm_nabla_phi"], float)


def test_text_format(capsys):
    code, out, _ = run(capsys, "classify", "--family-lee", "2,0,0,0", "--format", "text")
    assert code == EXIT_OK
    assert "class_flags.inF1 = true" in out


def test_report_lists_rho_star_frame_form_discrepancy(capsys):
    _, out, _ = run(capsys, "report", "--family-lee", "2,0,-1,0")
    ids = [d["id"] for d in json.loads(out)["discrepancies"]]
    assert ids == ["rho_star_frame_form"]


def test_gi_check(capsys):
    code, out, _ = run(capsys, "gi-check")
    assert code == EXIT_OK and json.loads(out)["gi_example"] == {"first": True, "second": True}


def test_sweep_small_grid(capsys):
    code, out, _ = run(capsys, "sweep", "--grid=-1:1:1")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["count"] == len(doc["points"]) > 0
    origin = next(p for p in doc["points"] if set(p["params"].values()) == {"0"})
    assert origin["class_flags"]["inF0"] is True


def test_verify_small_grid_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "props", "--grid=-1:1:1")
    doc = json.loads(out)
    assert code == EXIT_MISMATCH and doc["ok"] is False
    failed = {d["assertion"]: d["known"] for d in doc["discrepancies"]["failed_assertions"]}
    assert failed["proposition_3_2:3"] is True
    assert all(failed.values())

    code, out, _ = run(capsys, "verify", "props", "--grid=-1:1:1", "--expect-paper-discrepancies")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["ok"] is True
    pts = doc["discrepancies"]["proposition_3_3_nonconstant_points"]
    hit = next(p for p in pts if p["params"] == {"theta1": "1", "theta2": "-1", "omega1": "1", "omega2": "-1"})
    assert hit["sectional"]["k01"] == "-1/2"


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "acbgeom", "report", "--family-lee", "2,0,-1,0"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and json.loads(out.stdout)["curvature"]["tau"] == "2"
