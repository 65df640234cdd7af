import csv
import io
import json
import math
import subprocess
import sys

import pytest

from lllcount.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_anchor_relaxed(capsys):
    code, out, _ = run_cli(capsys, "compute", "--n", "2", "--eta", "0.3", "--delta", "0.6",
                           "--allow-relaxed-domain")
    assert code == 0
    doc = json.loads(out)
    row = doc["results"][0]
    assert row["eq2_ln"] == pytest.approx(math.log(4), abs=1e-12)
    assert row["eq1_ln"] == pytest.approx(math.log(4), abs=1e-12)
    assert doc["warnings"]


def test_relaxed_domain_needs_flag(capsys):
    code, out, err = run_cli(capsys, "compute", "--n", "2", "--eta", "0.3", "--delta", "0.6")
    assert code == 1
    assert out == ""
    assert "allow-relaxed-domain" in err
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize("argv", [
    ["compute", "--n", "10", "--eta", "0.9", "--delta", "0.8"],
    ["compute", "--n-min", "30", "--n-max", "20"],
    ["compute"],
    ["compute", "--n", "5", "--n-min", "3", "--n-max", "4"],
    ["bounds", "--n", "21"],
    ["approx", "--n", "30", "--c", "5"],
    ["verify", "--n-max", "5", "--tol", "-1"],
    ["sweep", "--n-min", "22", "--n-max", "23", "--jobs", "0"],
    ["nonsense"],
    ["compute", "--n", "abc"],
])
def test_invalid_invocations_exit_1(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err.strip()


def test_audit_lists_constants(capsys):
    code, out, _ = run_cli(capsys, "audit")
    assert code == 0
    doc = json.loads(out)
    names = {r["name"]: r for r in doc["results"]}
    assert "xi_prod_2_5" in names
    assert names["upper_prefactor_tight_step"]["flagged"]
    assert any("upper_lemma_tight_step" in w for w in doc["warnings"])


def test_verify_passes_small_range(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n-max", "24", "--tol", "1e-6")
    assert code == 0
    doc = json.loads(out)
    assert all(r["passed"] for r in doc["results"])
    checks = {r["check"] for r in doc["results"]}
    assert {"eq1_equals_eq2", "zeta_sandwich", "gamma_sandwich", "xi_prefactor_sandwich"} <= checks


def test_verify_failure_exit_2(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n-max", "6", "--tol", "1e-300")
    assert code == 2
    doc = json.loads(out)
    assert not all(r["passed"] for r in doc["results"])


def test_verify_strict_reports_count_sandwich(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n-min", "120", "--n-max", "120", "--strict")
    doc = json.loads(out)
    items = [r for r in doc["results"] if r["check"] == "combined_count_sandwich"]
    assert len(items) == 1
    assert code == (0 if items[0]["passed"] else 2)


def test_bounds_row(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--n", "22")
    assert code == 0
    row = json.loads(out)["results"][0]
    assert row["xi_prefactor_ok"] and row["int_product_ok"] and row["combined_secant_form_ok"]
    assert row["regime"] == "restricted"


def test_approx_relaxed_rough_closed_form(capsys):
    code, out, _ = run_cli(capsys, "approx", "--n", "30", "--eta", "0.3", "--delta", "0.6",
                           "--allow-relaxed-domain")
    assert code == 0
    row = json.loads(out)["results"][0]
    assert row["rough_ln"] == pytest.approx(-(30 ** 3) / 6 * math.log(math.sqrt(3) / 2), rel=1e-14)


def test_json_byte_identical(capsys):
    argv = ["sweep", "--n-min", "22", "--n-max", "26"]
    _, a, _ = run_cli(capsys, *argv)
    _, b, _ = run_cli(capsys, *argv)
    assert a == b


def test_jobs_preserves_order_and_values(capsys):
    argv = ["sweep", "--n-min", "22", "--n-max", "30"]
    _, serial, _ = run_cli(capsys, *argv)
    _, parallel, _ = run_cli(capsys, *argv, "--jobs", "3")
    assert serial == parallel
    assert [r["n"] for r in json.loads(parallel)["results"]] == list(range(22, 31))


def test_csv_matches_json(capsys):
    argv = ["compute", "--n-min", "2", "--n-max", "12"]
    _, js, _ = run_cli(capsys, *argv)
    _, cs, _ = run_cli(capsys, *argv, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(cs)))
    results = json.loads(js)["results"]
    assert len(rows) == len(results)
    for r, j in zip(rows, results):
        assert int(r["n"]) == j["n"]
        # both use 17 significant digits, so the round trip is exact
        assert float(r["eq2_ln"]) == j["eq2_ln"]
        assert float(r["eq1_ln"]) == j["eq1_ln"]


def test_plain_format(capsys):
    code, out, _ = run_cli(capsys, "compute", "--n", "5", "--format", "plain")
    assert code == 0
    assert "eq2_ln" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "res.json"
    code, out, _ = run_cli(capsys, "compute", "--n", "5", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["results"][0]["n"] == 5


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lllcount", "compute", "--n", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "compute"
