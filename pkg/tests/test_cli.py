import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from harmlike import cli, series, verify
from harmlike.series import SeriesCoefficients


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.mark.parametrize(
    "text, expected",
    [("0.5", 0.5), ("1+1i", 1 + 1j), ("-2.5-3e-2i", -2.5 - 0.03j), ("1e3", 1000), (".5+0i", 0.5)],
)
def test_parse_complex(text, expected):
    assert cli.parse_complex(text) == expected


@pytest.mark.parametrize("text", ["1 + 2i", "i", "1+2j", "abc", "1+i", ""])
def test_parse_complex_rejects(text):
    with pytest.raises(Exception):
        cli.parse_complex(text)


@pytest.mark.parametrize(
    "x, p, expected",
    [(5 / 6, 17, "0.8333333333333334"), (1.0, 17, "1"), (5 / 6, 3, "0.833"), (1e-20, 17, "1e-20"), (0.0, 5, "0")],
)
def test_format_float(x, p, expected):
    assert cli.format_float(x, p) == expected


def test_table_example(capsys):
    code, out, _ = run(capsys, "table", "--a", "0.5", "--n-max", "3", "--format", "csv")
    assert code == 0
    assert [r["value_re"] for r in csv_rows(out)] == ["1", "1", "0.8333333333333334"]
    assert out.splitlines()[0] == "n,a_re,a_im,method,value_re,value_im"


def test_table_classical(capsys):
    _, out, _ = run(capsys, "table", "--a", "1", "--n-max", "2")
    assert [r["value_re"] for r in csv_rows(out)] == ["1", "1.5"]


def test_table_complex_a(capsys):
    _, out, _ = run(capsys, "table", "--a", "1+1i", "--n-max", "1")
    row = csv_rows(out)[0]
    assert (row["a_re"], row["a_im"], row["value_re"], row["value_im"]) == ("1", "1", "1", "0")


def test_malformed_complex_is_usage_error(capsys):
    code, out, err = run(capsys, "table", "--a", "1+x")
    assert code == 2 and out == "" and "malformed" in err


def test_verify_staver(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "staver", "--n-max", "10")
    rows = csv_rows(out)
    p0 = [r for r in rows if r["key"].endswith("from_p0")]
    p1 = [r for r in rows if r["key"].endswith("from_p1")]
    assert code == 0
    assert len(p0) == 10 and all(r["outcome"] == "equal" and r["ok"] == "true" for r in p0)
    assert len(p1) == 10 and all(r["outcome"] == "differ" and r["ok"] == "true" for r in p1)
    assert rows[0]["lhs"] == "2/1" and rows[1]["lhs"] == "1/1"


def test_verify_series_coeffs(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "series_coeffs", "--n-max", "12")
    rows = [r for r in csv_rows(out) if r["suite"] == "series_coeffs"]
    assert code == 0
    assert len(rows) == 48 and all(r["outcome"] == "equal" for r in rows)


def test_verify_eq2(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "eq2", "--n-max", "30")
    rows = [r for r in csv_rows(out) if r["suite"] == "eq2"]
    assert code == 0 and len(rows) == 30


def test_verify_unknown_suite(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_verify_all_deterministic(capsys):
    first = run(capsys, "verify", "--suite", "all", "--n-max", "25")
    second = run(capsys, "verify", "--suite", "all", "--n-max", "25")
    assert first[0] == 0
    assert first[1] == second[1]
    last = csv_rows(first[1])[-1]
    assert last["suite"] == "summary" and last["ok"] == "true"


def _flip_one_sign(fid, n_max):
    good = series.exact_coefficients(fid, n_max)
    coeffs = list(good.coefficients)
    if fid == "si2" and len(coeffs) > 1:
        p, c = coeffs[1]
        coeffs[1] = (p, -c)
    return SeriesCoefficients(good.function_id, tuple(coeffs))


def test_mutation_flips_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(verify, "exact_coefficients", _flip_one_sign)
    code, out, _ = run(capsys, "verify", "--suite", "all", "--n-max", "25")
    assert code == 1
    bad = [r for r in csv_rows(out) if r["ok"] == "false"]
    assert [r["key"] for r in bad[:1]] == ["si2 z^4"]


def test_broken_staver_p0_is_deviation(capsys, monkeypatch):
    from harmlike import binomial

    real = binomial.inverse_binomial_sum
    monkeypatch.setattr(binomial, "inverse_binomial_sum", lambda n, include_p0=True: real(n, include_p0) + Fraction(1, 10**9))
    code, _, _ = run(capsys, "verify", "--suite", "staver", "--n-max", "3")
    assert code == 1


def test_compare_origin(capsys):
    code, out, _ = run(capsys, "compare", "--function", "si2", "--z-min", "0", "--z-max", "0", "--steps", "1")
    (row,) = csv_rows(out)
    assert code == 0
    assert (row["value_re"], row["reference_re"], row["abs_error"]) == ("0", "0", "0")


@pytest.mark.parametrize("fid, z", [("si2", "1"), ("cossi", "2"), ("shi2", "3"), ("coshshi", "4")])
def test_compare_accuracy(capsys, fid, z):
    _, out, _ = run(capsys, "compare", "--function", fid, "--z-min", z, "--z-max", z, "--steps", "1", "--tol", "1e-14")
    (row,) = csv_rows(out)
    assert float(row["abs_error"]) <= 1e-12 * max(1.0, abs(float(row["reference_re"])))
    assert row["converged"] == "true"


def test_compare_grid(capsys):
    _, out, _ = run(capsys, "compare", "--z-min", "0", "--z-max", "2", "--steps", "5")
    assert [r["z_re"] for r in csv_rows(out)] == ["0", "0.5", "1", "1.5", "2"]


@pytest.mark.parametrize(
    "argv",
    [
        ["compare", "--z-min", "2", "--z-max", "1"],
        ["compare", "--steps", "0"],
        ["compare", "--tol", "1.5"],
        ["compare", "--function", "si_ref"],
        ["coeffs", "--function", "tan"],
        ["table", "--precision", "18"],
        ["table", "--n-max", "0"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize(
    "fid, expected",
    [("si2", ["1/1", "-1/9"]), ("cossi", ["2/1", "-10/9"]), ("si_ref", ["1/1", "-1/18"])],
)
def test_coeffs(capsys, fid, expected):
    code, out, _ = run(capsys, "coeffs", "--function", fid, "--n-max", "2")
    assert code == 0
    assert [r["coefficient"] for r in csv_rows(out)] == expected


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--a", "0.3-0.7i", "--n-max", "12"],
        ["compare", "--function", "cos_si", "--z-min", "-3", "--z-max", "7", "--steps", "9"],
        ["coeffs", "--function", "shi2", "--n-max", "5"],
        ["verify", "--suite", "series_values"],
    ],
)
@pytest.mark.parametrize("precision", ["17", "6"])
def test_csv_json_same_content(capsys, argv, precision):
    _, as_csv, _ = run(capsys, *argv, "--precision", precision)
    _, as_json, _ = run(capsys, *argv, "--precision", precision, "--format", "json")
    rows = csv_rows(as_csv)
    records = json.loads(as_json)
    assert len(rows) == len(records)
    for row, rec in zip(rows, records):
        assert list(row) == list(rec)
        for key, text in row.items():
            value = rec[key]
            if isinstance(value, bool):
                assert text == str(value).lower()
            elif isinstance(value, (int, float)):
                assert float(text) == value
            else:
                assert text == value


def test_precision_rounds(capsys):
    _, out, _ = run(capsys, "table", "--a", "0.5", "--n-max", "3", "--precision", "4")
    assert csv_rows(out)[2]["value_re"] == "0.8333"


def test_executable_roundtrip():
    proc = subprocess.run(
        [sys.executable, "-m", "harmlike", "coeffs", "--function", "si2", "--n-max", "2", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert [r["coefficient"] for r in json.loads(proc.stdout)] == ["1/1", "-1/9"]
    assert "\r" not in proc.stdout
