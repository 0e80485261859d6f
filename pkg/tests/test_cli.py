import csv
import io
import json
import shutil
import subprocess
import sys
from importlib import resources

import pytest

from foilstates.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def golden(name):
    return resources.files("foilstates").joinpath("data", name).read_text()


def test_poly_statesum_json(capsys):
    code, out, _ = run(capsys, "poly", "foil", "3", "--method", "statesum", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"kind": "foil", "n": 3, "method": "statesum",
                   "coefficients": ["0", "3", "4", "1"]}


@pytest.mark.parametrize("argv,coeffs", [
    (["poly", "twist", "0"], [0, 1]),
    (["poly", "foil", "5", "--method", "closed"], [0, 5, 11, 10, 5, 1]),
    (["poly", "foil", "5", "--method", "recurrence"], [0, 5, 11, 10, 5, 1]),
    (["poly", "twist", "4", "--method", "statesum"], [0, 1, 4, 6, 4, 1]),
])
def test_poly_methods(capsys, argv, coeffs):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    assert [int(c) for c in json.loads(out)["coefficients"]] == coeffs


def test_poly_text_and_csv(capsys):
    _, out, _ = run(capsys, "poly", "foil", "3")
    assert out.splitlines()[0] == "x^3 + 4x^2 + 3x"
    _, out, _ = run(capsys, "--format", "csv", "poly", "foil", "1")
    assert out == "k,coefficient\n0,0\n1,1\n2,1\n"


def test_poly_statesum_cap(capsys):
    code, out, err = run(capsys, "poly", "foil", "6", "--method", "statesum",
                         "--max-enumeration", "5")
    assert code == 3
    assert out == ""
    assert "5" in err and "--max-enumeration" in err


def test_big_coefficients_as_strings(capsys):
    _, out, _ = run(capsys, "poly", "foil", "80", "--format", "json")
    coeffs = json.loads(out)["coefficients"]
    assert all(isinstance(c, str) for c in coeffs)
    assert int(coeffs[40]) == 107507208733336176461620


def test_table_twist_matches_golden(capsys):
    code, out, _ = run(capsys, "table", "twist", "6", "--format", "csv")
    assert code == 0
    assert out == golden("table1.csv")


def test_table_foil_matches_golden_except_erratum(capsys):
    _, out, _ = run(capsys, "table", "foil", "12", "--format", "csv")
    printed = golden("table2.csv")
    assert out != printed
    assert out.splitlines()[:-1] == printed.splitlines()[:-1]
    mine, theirs = out.splitlines()[-1].split(","), printed.splitlines()[-1].split(",")
    diff = [i for i, (a, b) in enumerate(zip(mine, theirs)) if a != b]
    # column 0 is n, so k = 8 sits at index 9
    assert diff == [9]
    assert (mine[9], theirs[9]) == ("495", "465")


def test_table_foil_zero(capsys):
    _, out, _ = run(capsys, "table", "foil", "0", "--format", "csv")
    assert out == "n,0,1,2\n0,0,0,1\n"
    _, out, _ = run(capsys, "table", "twist", "2", "--format", "json")
    assert json.loads(out)["rows"] == [["0", "1"], ["0", "1", "1"], ["0", "1", "2", "1"]]


def test_words(capsys):
    _, out, _ = run(capsys, "words", "foil2", "4")
    assert out.split() == ["0011", "0101", "0110", "1001", "1010", "1100", "1111"]
    _, out, _ = run(capsys, "words", "regions", "4", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "word" and len(lines) == 12


def test_empty_word_rendering(capsys):
    _, out, _ = run(capsys, "words", "regions", "0")
    assert out == "(empty)\n"
    _, out, _ = run(capsys, "words", "regions", "0", "--format", "json")
    assert json.loads(out)["words"] == [""]
    _, out, _ = run(capsys, "words", "regions", "0", "--format", "csv")
    # a lone empty field is quoted so CSV readers do not skip it as a blank line
    assert out == 'word\n""\n'
    assert list(csv.reader(io.StringIO(out))) == [["word"], [""]]


def test_words_domain_error(capsys):
    code, _, err = run(capsys, "words", "newregions", "0")
    assert code == 3
    assert "error" in err


def test_states(capsys):
    _, out, _ = run(capsys, "states", "foil", "4", "2")
    assert out.split() == ["0011", "0101", "0110", "1001", "1010", "1100", "1111"]
    _, out, _ = run(capsys, "states", "twist", "3", "1")
    assert out.split() == ["111"]


@pytest.mark.parametrize("n,rows", [(1, 2), (4, 11), (8, 37)])
def test_regions_geo(capsys, n, rows):
    _, out, _ = run(capsys, "regions-geo", str(n), "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "code,x,y"
    codes = {line.split(",")[0] for line in lines[1:]}
    assert len(lines) - 1 == rows == len(codes)
    _, words_out, _ = run(capsys, "words", "regions", str(n))
    assert codes == set(words_out.split())


def test_regions_geo_json_witnesses_are_exact(capsys):
    _, out, _ = run(capsys, "regions-geo", "3", "--format", "json")
    regions = json.loads(out)["regions"]
    assert {r["code"] for r in regions} == {"000", "100", "110", "001", "101", "011", "111"}
    assert any("/" in r["y"] for r in regions)


def test_bijection(capsys):
    _, out, _ = run(capsys, "bijection", "7")
    assert "1100001 -> 10110111" in out
    _, out, _ = run(capsys, "bijection", "0", "--format", "csv")
    assert out == "region_code,state_word\n,1\n"
    _, out, _ = run(capsys, "bijection", "0")
    assert out == "(empty) -> 1\n"
    _, out, _ = run(capsys, "bijection", "1", "--format", "json")
    assert json.loads(out)["pairs"] == [{"region_code": "0", "state_word": "00"},
                                        {"region_code": "1", "state_word": "11"}]


def test_bijection_grids_match_golden(capsys):
    _, out, _ = run(capsys, "bijection", "7", "--layout", "regions-grid", "--format", "csv")
    assert out == golden("table3.csv")
    _, out, _ = run(capsys, "bijection", "7", "--layout", "states-grid", "--format", "csv")
    assert out == golden("table4.csv")
    code, _, _ = run(capsys, "bijection", "0", "--layout", "states-grid")
    assert code == 3


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "12")
    assert code == 0
    assert out.strip().endswith("checks passed")
    assert "FAIL" not in out


def test_verify_negative_control(capsys, tmp_path):
    data = resources.files("foilstates").joinpath("data")
    for name in ("table1.csv", "table2.csv", "table3.csv", "table4.csv"):
        (tmp_path / name).write_text(data.joinpath(name).read_text())
    corrupted = (tmp_path / "table1.csv").read_text().replace("20,15", "21,15")
    (tmp_path / "table1.csv").write_text(corrupted)
    code, out, _ = run(capsys, "verify", "4", "--golden-dir", str(tmp_path), "--format", "json")
    assert code == 4
    doc = json.loads(out)
    failed = [c["name"] for c in doc["checks"] if not c["ok"]]
    assert failed == ["golden-twist-table"]


def test_verify_over_cap(capsys):
    code, _, err = run(capsys, "verify", "20", "--max-enumeration", "16")
    assert code == 3
    assert "--max-enumeration" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["poly", "knot", "3"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["poly", "foil", "-1"])
    assert info.value.code == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table", "twist", "6", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == golden("table1.csv")


def test_outputs_are_deterministic(capsys):
    for argv in (["regions-geo", "6", "--format", "json"], ["bijection", "5"],
                 ["words", "foil2", "9"]):
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second


@pytest.mark.skipif(shutil.which("foilstates") is None, reason="console script not installed")
def test_console_script():
    done = subprocess.run(["foilstates", "poly", "foil", "3"], capture_output=True, text=True)
    assert done.returncode == 0
    assert done.stdout.startswith("x^3 + 4x^2 + 3x")


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "foilstates", "words", "twist2", "3"],
                          capture_output=True, text=True)
    assert done.returncode == 0
    assert done.stdout.split() == ["011", "101", "110"]
