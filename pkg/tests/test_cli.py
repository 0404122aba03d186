import io
import json
import subprocess
import sys

import pytest

from spinharm.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_multiplet_json_rows():
    code, out = run("multiplet", "--j", "1")
    assert code == 0
    doc = json.loads(out)
    assert [k["m"] for k in doc["kets"]] == ["1", "0", "-1"]
    assert [k["norm_factor"] for k in doc["kets"]] == ["1", "sqrt(2)", "2"]


@pytest.mark.parametrize("fmt", ["json", "csv", "latex"])
def test_multiplet_formats_deterministic(fmt):
    a = run("multiplet", "--j", "3/2", "--format", fmt, "--normalized")
    b = run("multiplet", "--j", "1.5", "--format", fmt, "--normalized")
    assert a == b and a[0] == 0 and a[1]


def test_eval_frozen():
    code, out = run("eval", "--j", "1/2", "--m", "1/2", "--point", "1,1.5707963,0,0")
    assert code == 0
    v = json.loads(out)["value"]
    assert v["re"] == pytest.approx(0.7071067811865476, abs=1e-7) and v["im"] == 0


def test_verify_weyl():
    code, out = run("verify", "--suite", "weyl")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert all(c["passed"] for c in doc["checks"])


def test_verify_repr_small():
    code, out = run("verify", "--suite", "repr", "--max-j", "2")
    assert code == 0 and json.loads(out)["passed"]


def test_hydrogen():
    code, out = run("hydrogen", "--j", "3/2", "--all-m", "--samples", "20")
    doc = json.loads(out)
    assert code == 0 and len(doc["reports"]) == 4


def test_hydrogen_fails_with_tight_tol():
    code, _ = run("hydrogen", "--j", "1/2", "--m", "1/2", "--samples", "20", "--tol", "1e-14")
    assert code == 1


def test_hopf():
    code, out = run("hopf", "--u", "1,0,0,0")
    doc = json.loads(out)
    assert code == 0 and doc["x"] == [0, 0, 1] and doc["pole"]
    code, out = run("hopf", "--z", "1.4142135623730951,0,1.4142135623730951,0")
    doc = json.loads(out)
    assert doc["euler"]["r"] == pytest.approx(4) and not doc["pole"]


def test_sweep():
    code, out = run("sweep", "--tag", "Lplus", "--max-j", "1", "--samples", "30")
    assert code == 0 and json.loads(out)["passed"]


@pytest.mark.parametrize(
    "argv",
    [
        ("bogus",),
        ("multiplet",),
        ("multiplet", "--j", "1/3"),
        ("eval", "--j", "1", "--m", "2", "--point", "1,1,1,1"),
        ("eval", "--j", "1", "--m", "0", "--point", "1,1"),
        ("eval", "--j", "1", "--m", "0", "--point", "0,1,1,1"),
        ("hydrogen", "--j", "1"),
        ("hopf",),
        ("hopf", "--u", "0,0,0,0", "--z", "1,0,0,0"),
        ("sweep", "--tag", "Nope"),
        ("hydrogen", "--j", "1/2", "--hbar", "-1"),
    ],
)
def test_usage_errors(argv, capsys):
    code, _ = run(*argv)
    assert code == 2


def test_help_exits_zero():
    assert run("--help")[0] == 0


def test_console_script_module():
    proc = subprocess.run(
        [sys.executable, "-m", "spinharm.cli", "multiplet", "--j", "1/2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["j"] == "1/2"
