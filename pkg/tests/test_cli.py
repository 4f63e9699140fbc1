import io
import json
import subprocess
import sys

import pytest

from canonical_arcs.cli import run

LEMN = "inf,1,0,-1"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_enumerate_height_one():
    code, out, _ = call("enumerate", "--max-height", "1")
    assert code == 0
    assert out.splitlines() == ["(1,0) 01|23", "(-1,1) 03|12", "(0,1) 02|13", "(1,1) 03|12"]


def test_enumerate_json():
    code, out, _ = call("enumerate", "--max-height", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc) == 8 and doc[0] == {"r": 1, "s": 0, "pairing": "01|23"}


def test_solve_stdout_is_deterministic():
    a = call("solve", "--points", LEMN, "--class", "1/0")
    b = call("solve", "--points", LEMN, "--class", "1/0")
    assert a[0] == 0 and a[1] == b[1]
    doc = json.loads(a[1])
    assert doc["pairing"] == "01|23" and doc["points"][0] == "inf"


def test_solve_verify_render(tmp_path):
    cfg, svg, rep, svg2 = (tmp_path / n for n in ("c.json", "c.svg", "r.json", "d.svg"))
    code, out, _ = call("solve", "--points", LEMN, "--class", "1/2", "--pairing", "01|23",
                        "--out", str(cfg), "--svg", str(svg))
    assert code == 0 and "pairing 01|23" in out
    assert svg.read_text().startswith("<?xml")
    code, out, _ = call("verify", str(cfg), "--report", str(rep))
    assert code == 0 and out.splitlines()[-1] == "result pass"
    report = json.loads(rep.read_text())
    assert report["passed"] is True
    code, _, _ = call("render", str(cfg), "--svg", str(svg2), "--width", "300")
    assert code == 0 and 'width="300"' in svg2.read_text()


def test_verify_failure_exit_code(tmp_path):
    cfg = tmp_path / "c.json"
    assert call("solve", "--points", LEMN, "--class", "1/0", "--out", str(cfg))[0] == 0
    doc = json.loads(cfg.read_text())
    # drag the interior of the ray off the real axis
    arc = doc["arcs"][0]
    for k in range(1, len(arc) - 1):
        arc[k] = [arc[k][0], arc[k][1] + 0.3 * min(k, len(arc) - 1 - k) / len(arc)]
    cfg.write_text(json.dumps(doc))
    code, out, _ = call("verify", str(cfg))
    assert code == 1 and out.splitlines()[-1] == "result FAIL"


@pytest.mark.parametrize(
    "argv, name",
    [
        (("solve", "--points", "inf,1,1,2", "--class", "1/0"), "DuplicatePoints"),
        (("solve", "--points", LEMN, "--class", "2/4"), "NotPrimitive"),
        (("solve", "--points", LEMN, "--class", "1/0", "--pairing", "02|13"), "PairingMismatch"),
        (("solve", "--points", "inf,1,0", "--class", "1/0"), "InvalidArguments"),
        (("solve", "--points", "inf,1,0,zz", "--class", "1/0"), "InvalidArguments"),
        (("solve", "--points", LEMN, "--class", "1/0", "--h", "-1"), "InvalidInput"),
        (("frobnicate",), "InvalidArguments"),
        (("enumerate", "--max-height", "0"), "InvalidInput"),
        (("verify", "/nonexistent/c.json"), "InvalidArguments"),
        (("render", "/nonexistent/c.json", "--svg", "x.svg"), "InvalidArguments"),
    ],
)
def test_invalid_input_exit_2(argv, name):
    code, out, err = call(*argv)
    assert code == 2
    lines = err.splitlines()
    assert len(lines) == 1 and lines[0].startswith(f"error: {name}: ")


def test_numerical_failure_exit_3():
    code, _, err = call("solve", "--points", LEMN, "--class", "3/2", "--h", "1e-5")
    assert code == 3 and err.startswith("error: BudgetExceeded: ")


def test_malformed_document_exit_2(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text('{"format": "canonical-arcs/config"}')
    code, _, err = call("verify", str(f))
    assert code == 2 and err.startswith("error: InvalidInput: ")


def test_bad_verify_options(tmp_path):
    cfg = tmp_path / "c.json"
    call("solve", "--points", LEMN, "--class", "1/0", "--out", str(cfg))
    assert call("verify", str(cfg), "--tol", "0")[0] == 2
    assert call("verify", str(cfg), "--resolution", "1")[0] == 2


def test_console_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "canonical_arcs.cli", "enumerate", "--max-height", "1"],
        capture_output=True, text=True, check=False,
    )
    assert r.returncode == 0 and r.stdout.startswith("(1,0) 01|23")
