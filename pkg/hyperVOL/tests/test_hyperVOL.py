import json
import math
import os

import pytest

import hyperVOL.hyperVOL as hyperVOL
import hyperVOL.records as records

SQRT3 = math.sqrt(3.0)

def run(argv, capsys):
    retcode = hyperVOL.main(hyperVOL.getargs(argv))
    captured = capsys.readouterr()
    return retcode, captured.out, captured.err

def run_csv(argv, capsys):
    retcode, out, _ = run(argv, capsys)
    assert retcode == 0
    return records.ParseCSV(out)

def exit_code(argv):
    with pytest.raises(SystemExit) as e:
        hyperVOL.main(hyperVOL.getargs(argv))
    return e.value.code

def column(record, name):
    i = record.columns.index(name)
    return [row[i] for row in record.rows]

def test_volume_disk(capsys):
    rec = run_csv(["volume", "--dim", "2", "--radius", "1"], capsys)
    assert rec.columns == ["n", "r", "log_volume", "volume"]
    assert abs(column(rec, "volume")[0] - math.pi) < 1e-14

def test_volume_circumscribe(capsys):
    rec = run_csv(["volume", "--dim", "4", "--circumscribe"], capsys)
    assert column(rec, "r")[0] == 1.0
    assert abs(column(rec, "volume")[0] - math.pi**2/2.0) < 1e-13

def test_volume_underflow_sentinel(capsys):
    rec = run_csv(["volume", "--dim", "1000", "--radius", "1"], capsys)
    assert column(rec, "log_volume")[0] < -700
    assert column(rec, "volume")[0] == "0 (underflow)"

def test_volume_overflow_sentinel(capsys):
    rec = run_csv(["volume", "--dim", "1000", "--radius", "100"], capsys)
    assert column(rec, "volume")[0] == "inf (overflow)"

def test_volume_log_only(capsys):
    rec = run_csv(["volume", "--dim", "3", "--radius", "1", "--log"], capsys)
    assert rec.columns == ["n", "r", "log_volume"]

@pytest.mark.parametrize("form", ["closed", "product", "recurrence"])
def test_volume_forms(form, capsys):
    rec = run_csv(["volume", "--dim", "5", "--radius", "1", "--form", form], capsys)
    assert abs(column(rec, "volume")[0] - 8.0*math.pi**2/15.0) < 1e-12

def test_volume_usage_errors():
    assert exit_code(["volume", "--dim", "2", "--radius", "1", "--circumscribe"]) == 2
    assert exit_code(["volume", "--dim", "2"]) == 2
    assert exit_code(["volume", "--dim", "two", "--radius", "1"]) == 2

def test_volume_domain_errors():
    assert exit_code(["volume", "--dim", "0", "--radius", "1"]) == 1
    assert exit_code(["volume", "--dim", "3", "--radius", "-1"]) == 1
    assert exit_code(["volume", "--dim", "2", "--radius", "1", "--form", "product"]) == 1

def test_ratio(capsys):
    rec = run_csv(["ratio", "--dim", "2"], capsys)
    assert rec.columns == ["n", "g", "limit", "abs_error"]
    assert abs(column(rec, "g")[0] - 1.7320508) < 1e-7

def test_ratio_large_n(capsys):
    rec = run_csv(["ratio", "--dim", "1000000"], capsys)
    assert column(rec, "abs_error")[0] <= 2e-6

def test_ratio_range(capsys):
    rec = run_csv(["ratio", "--dim", "2", "--dim-max", "10"], capsys)
    assert column(rec, "n") == list(range(2, 11))
    g = column(rec, "g")
    assert all(a < b for a, b in zip(g, g[1:]))

def test_ratio_literal(capsys):
    rec = run_csv(["ratio", "--dim", "3", "--literal-eq3"], capsys)
    assert abs(column(rec, "g")[0] - SQRT3) < 1e-12
    assert exit_code(["ratio", "--dim", "2", "--literal-eq3"]) == 1
    assert exit_code(["ratio", "--dim", "5", "--dim-max", "4"]) == 2

def test_figure_defaults(capsys, tmp_path):
    out = str(tmp_path / "fig.csv")
    retcode, _, _ = run(["figure", "--out", out], capsys)
    assert retcode == 0
    with open(out, "r", newline="") as f:
        text = f.read()
    assert text.startswith("nu,g\n")
    assert "\r" not in text
    rec = records.ParseCSV(text)
    assert len(rec.rows) == 500
    nu = column(rec, "nu")
    g = column(rec, "g")
    assert nu[0] == 3 and nu[-1] == 25
    assert abs(g[0] - 1.7320508) <= 1e-6
    assert abs(g[-1] - 2.0254) <= 0.002
    assert all(a < b for a, b in zip(g, g[1:]))

def test_figure_byte_identical(capsys, tmp_path):
    paths = [str(tmp_path / "a.csv"), str(tmp_path / "b.csv")]
    for p in paths:
        run(["figure", "--out", p], capsys)
    with open(paths[0], "rb") as f1, open(paths[1], "rb") as f2:
        assert f1.read() == f2.read()

@pytest.mark.parametrize("argv", [
    ["figure", "--min", "2", "--max", "25"],
    ["figure", "--min", "10", "--max", "5"],
    ["figure", "--points", "1"],
    ["figure", "--min", "nan"],
    ["figure", "--max", "inf"],
    ["figure", "--min", "3", "--max", "nan"],
])
def test_figure_usage_errors(argv):
    assert exit_code(argv) == 2

def test_converge(capsys):
    rec = run_csv(["converge", "--dims", "100,1000,10000,100000"], capsys)
    assert rec.columns == ["n", "g", "abs_error", "predicted"]
    footer = dict(rec.footer)
    assert -1.05 <= footer["fitted_order"] <= -0.95
    assert len(rec.rows) == 4

def test_converge_json(capsys):
    retcode, out, _ = run(["converge", "--dims", "10000,100000,1000000", "--format", "json"], capsys)
    assert retcode == 0
    data = json.loads(out)
    assert [item["n"] for item in data[:-1]] == [10000, 100000, 1000000]
    assert abs(data[-1]["fitted_constant"] - 1.033) <= 0.02

@pytest.mark.parametrize("dims", ["10,20", "1000000", "2,10,100"])
def test_converge_domain_errors(dims):
    assert exit_code(["converge", "--dims", dims]) == 1

def test_converge_usage_error():
    assert exit_code(["converge", "--dims", "10,x,30"]) == 2

def test_peak(capsys):
    rec = run_csv(["peak", "--radius", "1"], capsys)
    assert column(rec, "peak_n") == [5]

def test_peak_window_warning(capsys):
    retcode, _, err = run(["peak", "--radius", "10", "--n-max", "50"], capsys)
    assert retcode == 0
    assert "n_max=50" in err

def test_mc(capsys):
    rec = run_csv(["mc", "--dim", "2", "--radius", "1", "--samples", "1000000", "--seed", "42"], capsys)
    est = column(rec, "volume_estimate")[0]
    se = column(rec, "std_error")[0]
    assert abs(est - math.pi) <= 3*se
    assert abs(column(rec, "deviation")[0]) <= 3*se

def test_mc_errors():
    assert exit_code(["mc", "--dim", "13", "--radius", "1"]) == 1
    assert exit_code(["mc", "--dim", "3", "--radius", "1", "--samples", "10"]) == 1
    assert exit_code(["mc", "--dim", "3", "--radius", "1", "--workers", "0"]) == 2
    assert exit_code(["mc", "--dim", "12", "--radius", "1e30"]) == 1
    assert exit_code(["mc", "--dim", "12", "--radius", "1e-30"]) == 1

def test_table(capsys):
    rec = run_csv(["table", "--min-dim", "1", "--max-dim", "12"], capsys)
    assert column(rec, "n") == list(range(1, 13))
    assert all(v == 1 for v in column(rec, "cube_volume"))
    assert abs(column(rec, "volume")[0] - 1.0) < 1e-15
    assert abs(column(rec, "growth_ratio")[1] - SQRT3) < 1e-12

def test_check(capsys):
    rec = run_csv(["check", "--dim", "3"], capsys)
    assert column(rec, "vertex_max_deviation")[0] <= 1e-12
    assert column(rec, "inside_fraction")[0] == 1

def test_check_high_dim(capsys):
    retcode, out, err = run(["check", "--dim", "30", "--samples", "10000"], capsys)
    assert retcode == 0
    assert "Skipping vertex" in err
    assert column(records.ParseCSV(out), "inside_fraction")[0] == 1

def test_json_output(capsys):
    retcode, out, _ = run(["volume", "--dim", "1000", "--radius", "1", "--format", "json"], capsys)
    data = json.loads(out)
    assert list(data[0].keys()) == ["n", "r", "log_volume", "volume"]
    assert data[0]["volume"] == "0 (underflow)"

@pytest.mark.parametrize("argv", [
    ["figure"],
    ["converge"],
    ["volume", "--dim", "1000", "--radius", "1"],
    ["mc", "--dim", "4", "--circumscribe", "--samples", "20000"],
])
def test_csv_round_trip(argv, capsys):
    _, out, _ = run(argv, capsys)
    assert records.RenderCSV(records.ParseCSV(out)) == out

def test_identical_invocations(capsys):
    argv = ["mc", "--dim", "5", "--radius", "1", "--samples", "50000", "--seed", "3"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv + ["--workers", "4"], capsys)
    assert first == second

def test_unwritable_output(tmp_path):
    out = os.path.join(str(tmp_path), "missing", "out.csv")
    assert exit_code(["ratio", "--dim", "3", "--out", out]) == 1

def test_check_skipped_vertex_is_float(capsys):
    _, out, _ = run(["check", "--dim", "30", "--samples", "10000", "--format", "json"], capsys)
    data = json.loads(out)
    assert data[0]["vertex_max_deviation"] == "nan"
    rec = records.ParseCSV(run(["check", "--dim", "30", "--samples", "10000"], capsys)[1])
    assert math.isnan(column(rec, "vertex_max_deviation")[0])

def test_mc_underflowing_analytic_volume(capsys):
    # box (2r)^12 is still a normal double, the ball volume is not
    argv = ["mc", "--dim", "12", "--radius", "1.5e-26", "--samples", "1000"]
    rec = run_csv(argv, capsys)
    assert column(rec, "analytic_volume")[0] == "0 (underflow)"
    assert math.isnan(column(rec, "deviation")[0])
    data = json.loads(run(argv + ["--format", "json"], capsys)[1])
    assert data[0]["deviation"] == "nan"
