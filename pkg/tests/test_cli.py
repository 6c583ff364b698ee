import io
import json
import subprocess
import sys

import pytest

from revdickson.cli import CSV_HEADER, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_check_permutation():
    code, out, _ = call("check", "--p", "3", "--e", "1", "--poly", "1,1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"is_permutation": True, "witness": None}


def test_check_not_permutation():
    code, out, _ = call("check", "--p", "5", "--e", "1", "--poly", "0,1,1,3", "--format", "json")
    assert code == 1
    assert json.loads(out)["witness"] == {"kind": "collision", "data": [0, 1]}


def test_check_hermite():
    code, out, _ = call("check", "--p", "5", "--poly", "0,1,1,3", "--method", "hermite", "--format", "text")
    assert code == 1 and "hermite" in out


def test_field_command():
    code, out, _ = call("field", "--p", "3", "--e", "2", "--format", "json")
    assert code == 0 and json.loads(out)["modulus"] == "1,0,1"
    code, _, err = call("field", "--p", "5", "--e", "2", "--modulus", "1,0,1")
    assert code == 2 and "reducible" in err


def test_dickson_command():
    code, out, _ = call("dickson", "--p", "7", "--n", "4", "--k", "1", "--format", "text")
    # D_{4,1}(1,x) = 1 - 3x + x^2
    assert code == 0 and out.strip() == "1,4,1"
    code, out, _ = call("dickson", "--p", "5", "--n", "0", "--k", "2", "--format", "text")
    assert out.strip() == ""


def test_verify_thm41():
    code, out, _ = call("verify", "--theorem", "thm4.1", "--e-max", "3", "--l-max", "13")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 3 * 14
    assert all(r["agree"] for r in rows)


def test_verify_csv_header_and_determinism():
    argv = ["verify", "--theorem", "thm3.1", "--p-list", "5,7", "--format", "csv"]
    code, out1, _ = call(*argv)
    _, out2, _ = call(*argv)
    assert code == 0
    assert out1 == out2
    assert out1.splitlines()[0] == ",".join(CSV_HEADER)


def test_json_determinism():
    argv = ["scan", "--family", "dickson_n_pl2", "--p-list", "5", "--e-max", "2", "--format", "json"]
    assert call(*argv)[1] == call(*argv)[1]


def test_usage_and_cap_errors():
    assert call("check", "--p", "5")[0] == 2
    assert call("bogus")[0] == 2
    assert call("verify", "--theorem", "thm3.1", "--p-list", "19")[0] == 3
    assert call("check", "--p", "7", "--e", "3", "--poly", "0,1", "--method", "hermite", "--q-cap", "100")[0] == 3


def test_verify_witnesses_recheck_under_check():
    code, out, _ = call("verify", "--theorem", "thm4.1", "--e-max", "2")
    assert code == 0
    from revdickson.gf import build_field
    from revdickson.theorems import FamilyParams, family_poly
    for line in out.splitlines():
        row = json.loads(line)
        params = FamilyParams(row["p"], row["e"], row["l"], row["k"])
        poly_text = family_poly(params, row["family"]).to_text()
        c, o, _ = call("check", "--p", str(row["p"]), "--e", str(row["e"]), "--poly", poly_text, "--format", "json")
        assert (c == 0) == row["observed"]
        if row["witness"]:
            assert json.loads(o)["witness"] == row["witness"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "revdickson", "check", "--p", "3", "--poly", "1,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["is_permutation"] is True


@pytest.mark.parametrize("theorem", ["result1", "result2", "result3", "result4"])
def test_verify_results_exit_zero(theorem):
    assert call("verify", "--theorem", theorem, "--p-list", "5,7", "--e-max", "1")[0] == 0
