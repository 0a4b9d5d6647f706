import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from fiberknots.cli import main
from schemas import REPORT, SCAN

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cf_eval(capsys):
    assert run(capsys, "cf", "eval", "3,-2,5")[:2] == (0, "11/38\n")
    code, out, _ = run(capsys, "--json", "cf", "eval", "3,-2,5")
    assert json.loads(out) == {"value": "11/38"}


def test_cf_expand(capsys):
    assert run(capsys, "cf", "expand", "2/7")[:2] == (0, "4,2\n")
    code, out, _ = run(capsys, "cf", "expand", "2/7", "--json")
    assert json.loads(out) == {"coefficients": [4, 2]}
    assert run(capsys, "cf", "expand", "0")[1] == "[]\n"


def test_cf_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cf", "eval"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "cf", "eval", "3,zz,5")
    assert code == 2 and "'zz'" in err


def test_curve_and_twist(capsys):
    assert run(capsys, "curve", "3,-2,5")[1] == "11 38\n"
    assert run(capsys, "twist", "b^-3,a^2,b^-5", "a")[1] == "11 38\n"
    assert run(capsys, "twist", "b^-1", "1/0")[1] == "1 1\n"
    assert run(capsys, "twist", "c^2", "a")[0] == 2


def test_genus(capsys):
    code, out, _ = run(capsys, "--json", "genus", "2/7")
    data = json.loads(out)
    assert (data["genus"], data["strands"], data["crossings"]) == (13, 7, 32)
    assert run(capsys, "genus", "--ktw", "3", "2")[1] == "13\n"
    assert run(capsys, "genus", "a")[0] == 3


def test_small(capsys):
    code, out, _ = run(capsys, "--json", "small", "3,-2,3")
    assert json.loads(out)["witnesses"] == [
        {"I": [1], "J": [3], "condition": "1 in I", "sum_value": 0}]
    assert run(capsys, "small", "3,-2,5")[1] == "small\n"
    assert run(capsys, "small", "3,-2,1")[0] == 4


def test_report_small(capsys):
    code, out, _ = run(capsys, "report", "3", "2", "5")
    data = json.loads(out)
    jsonschema.validate(data, REPORT)
    assert data["smallness"]["small"] is True and data["smallness"]["witnesses"] == []
    assert data["msmall"] is True
    assert data["curve_class"] == [11, 38]
    assert data["ktw_genus"] == 13
    assert data["heegaard_genus_bound"] == 2
    assert data["growth_rate"] is None
    assert data["conditions"]["hyperbolic"] == "out of scope"


def test_report_witness(capsys):
    data = json.loads(run(capsys, "report", "3", "2", "3")[1])
    jsonschema.validate(data, REPORT)
    assert data["smallness"]["small"] is False
    assert [(w["I"], w["J"]) for w in data["smallness"]["witnesses"]] == [([1], [3])]


def test_report_growth(capsys):
    data = json.loads(run(capsys, "report", "3", "2", "5", "--b0", "9", "--b1", "4")[1])
    jsonschema.validate(data, REPORT)
    assert data["growth_rate"]["min"] == "3/4"
    assert data["growth_rate"]["max"] == "7/9"


def test_report_inapplicable_and_degenerate(capsys):
    code, out, _ = run(capsys, "report", "3", "2", "0")
    data = json.loads(out)
    jsonschema.validate(data, REPORT)
    assert code == 0
    assert data["smallness"]["applicable"] is False
    assert data["surgery"]["L7"]["error"]


def test_report_ranges(capsys):
    assert run(capsys, "report", "2", "2", "5")[0] == 3
    assert run(capsys, "report", "3", "2", "5", "--b0", "4")[0] == 2
    assert run(capsys, "report", "3", "2", "5", "--b0", "4", "--b1", "4")[0] == 3


@pytest.mark.parametrize("argv, not_small", [
    (("3", "2", "2", "10"), [2, 3]),
    (("7", "3", "2", "5"), []),
])
def test_scan(capsys, argv, not_small):
    data = json.loads(run(capsys, "scan", *argv)[1])
    jsonschema.validate(data, SCAN)
    assert data["summary"]["not_small"] == not_small
    assert data["summary"]["matches_expected"] is True


def test_scan_range_error(capsys):
    assert run(capsys, "scan", "3", "2", "10", "2")[0] == 3


def test_growth(capsys):
    assert run(capsys, "growth", "4", "2")[1] == "1/2\n"
    data = json.loads(run(capsys, "--json", "growth", "--eps", "1/10")[1])
    assert data["b1_target"] == 11
    assert run(capsys, "growth", "2", "2")[0] == 3
    assert run(capsys, "growth")[0] == 2


@pytest.mark.parametrize("argv, golden", [
    (("3", "2", "5", "c7"), "c7_3_2_5.txt"),
    (("3", "2", "5", "c7", "--figure-variant"), "c7_3_2_5_figure.txt"),
    (("3", "2", "5", "l7"), "l7_3_2_5.txt"),
])
def test_surgery_golden(capsys, tmp_path, argv, golden):
    code, out, _ = run(capsys, "surgery", *argv)
    assert code == 0 and out.encode() == (GOLDEN / golden).read_bytes()
    path = tmp_path / "out.txt"
    assert run(capsys, "surgery", *argv, "--out", str(path))[:2] == (0, "")
    assert path.read_bytes() == (GOLDEN / golden).read_bytes()


def test_surgery_degenerate(capsys):
    code, _, err = run(capsys, "surgery", "3", "2", "0", "l7")
    assert code == 3 and "zero" in err


def test_determinism(capsys):
    first = run(capsys, "report", "4", "3", "7", "--b0", "12", "--b1", "5")[1]
    second = run(capsys, "report", "4", "3", "7", "--b0", "12", "--b1", "5")[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fiberknots", "cf", "eval", "3,-2,5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "11/38\n"
