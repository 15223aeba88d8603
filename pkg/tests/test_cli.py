import json

import pytest

from catcorr.cli import main

TABLE_3X2_CONTINGENCY = ",X,Y\nA,3,0\nB,2,2\nC,0,2\n"
TABLE_4X2_CONTINGENCY = ",X,Y\nA,1,4\nB,2,3\nC,3,2\nD,1,2\n"
TABLE_2X2_CONTINGENCY = ",X,Y\nA,3,1\nB,2,2\n"


def write(tmp_path, name, content):
    path = tmp_path / name
    path.write_text(content, encoding="utf-8")
    return str(path)


def records_csv(pairs):
    return "v1,v2\n" + "".join(f"{a},{b}\n" for a, b in pairs)


@pytest.fixture
def t3x2(tmp_path):
    return write(tmp_path, "t3x2.csv", TABLE_3X2_CONTINGENCY)


@pytest.fixture
def t4x2(tmp_path):
    return write(tmp_path, "t4x2.csv", TABLE_4X2_CONTINGENCY)


@pytest.fixture
def t2x2(tmp_path):
    return write(tmp_path, "t2x2.csv", TABLE_2X2_CONTINGENCY)


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# chi2


def test_chi2_text_report(capsys, t3x2):
    code, out, err = run(
        capsys, "chi2", "--input", t3x2, "--format", "contingency"
    )
    assert code == 0
    assert "chi2 = 4.95" in out
    assert "df = 2" in out
    assert "p_value = 0.0842" in out
    assert "v_cramer_squared = 0.55" in out
    assert "reject independence at alpha=0.1: yes" in out
    assert "observed frequencies" in out and "expected frequencies" in out
    assert "warning: expected frequencies below 5" in err


def test_chi2_records_input_equivalent(capsys, tmp_path, t3x2):
    pairs = [("A", "X")] * 3 + [("B", "X")] * 2 + [("B", "Y")] * 2 + [("C", "Y")] * 2
    rec = write(tmp_path, "records.csv", records_csv(pairs))
    _, out_rec, _ = run(capsys, "chi2", "--input", rec)
    _, out_tab, _ = run(capsys, "chi2", "--input", t3x2, "--format", "contingency")
    assert out_rec == out_tab


def test_chi2_json_round_trips_full_precision(capsys, t3x2):
    from catcorr import ContingencyTable, chi_square_test
    import warnings

    code, out, _ = run(
        capsys, "chi2", "--input", t3x2, "--format", "contingency", "--out", "json"
    )
    assert code == 0
    payload = json.loads(out)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        expected = chi_square_test(
            ContingencyTable(("A", "B", "C"), ("X", "Y"), [[3, 0], [2, 2], [0, 2]])
        )
    assert payload["statistic"] == expected.statistic
    assert payload["p_value"] == expected.p_value
    assert payload["v_cramer_squared"] == expected.v_cramer_squared
    assert payload["df"] == 2
    assert payload["reject_null"] is True
    assert payload["observed"]["counts"] == [[3, 0], [2, 2], [0, 2]]


def test_chi2_alpha_changes_verdict(capsys, t3x2):
    _, out, _ = run(
        capsys, "chi2", "--input", t3x2, "--format", "contingency", "--alpha", "0.05"
    )
    assert "reject independence at alpha=0.05: no" in out


def test_chi2_fail_to_reject_for_independent_table(capsys, tmp_path):
    path = write(tmp_path, "indep.csv", ",X,Y\nA,10,20\nB,20,40\n")
    _, out, _ = run(capsys, "chi2", "--input", path, "--format", "contingency")
    assert "reject independence at alpha=0.1: no" in out


def test_chi2_degenerate_margin_exits_3(capsys, tmp_path):
    path = write(tmp_path, "degenerate.csv", ",X,Y\nA,3,0\nB,2,0\n")
    code, _, err = run(capsys, "chi2", "--input", path, "--format", "contingency")
    assert code == 3
    assert "degenerate margin" in err


def test_chi2_csv_output(capsys, t3x2):
    code, out, _ = run(
        capsys, "chi2", "--input", t3x2, "--format", "contingency", "--out", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "metric,value"
    assert "statistic,4.95" in lines


# ---------------------------------------------------------------------------
# code


def test_code_emits_rank_codes(capsys, t3x2):
    code, out, _ = run(capsys, "code", "--input", t3x2, "--format", "contingency")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["v1", "v2"]
    body = [l.split() for l in lines[1:]]
    assert body == [
        ["2", "3"],
        ["2", "3"],
        ["2", "3"],
        ["2.5", "3"],
        ["2.5", "3"],
        ["2.5", "2.5"],
        ["2.5", "2.5"],
        ["1.5", "2.5"],
        ["1.5", "2.5"],
    ]


def test_code_all_permutations_two_columns(capsys, t2x2):
    code, out, _ = run(
        capsys,
        "code",
        "--input",
        t2x2,
        "--format",
        "contingency",
        "--all-permutations",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["v1_1", "v1_2", "v2"]
    first = lines[1].split()
    assert sorted(first[:2]) == ["-2.5", "2.5"]  # both phase choices present
    assert first[2] == "3"


def test_code_json_uses_re_im_pairs(capsys, t2x2):
    _, out, _ = run(
        capsys, "code", "--input", t2x2, "--format", "contingency", "--out", "json"
    )
    payload = json.loads(out)
    v1 = payload["columns"][0]
    assert v1["assignment"] == {"A": 0, "B": 1}
    assert v1["values"][0] == [2.5, 0.0]
    last = v1["values"][-1]
    assert last[0] == pytest.approx(-2.5)
    assert last[1] == pytest.approx(0.0, abs=1e-12)


def test_code_cardinality_coding(capsys, t3x2):
    _, out, _ = run(
        capsys,
        "code",
        "--input",
        t3x2,
        "--format",
        "contingency",
        "--coding",
        "cardinality",
    )
    assert out.splitlines()[1].split() == ["3", "5"]


# ---------------------------------------------------------------------------
# corr


def test_corr_single_coefficient(capsys, t3x2):
    code, out, _ = run(capsys, "corr", "--input", t3x2, "--format", "contingency")
    assert code == 0
    assert "phase assignments: 1" in out
    assert "0.253" in out
    assert "center = 0.253" in out


def test_corr_sweep_output(capsys, t4x2):
    code, out, _ = run(capsys, "corr", "--input", t4x2, "--format", "contingency")
    assert code == 0
    assert "phase assignments: 6" in out
    assert "0.194+0.104i" in out
    assert "-0.167-0.104i" in out
    assert "center = 0.013" in out


def test_corr_emit_plot(capsys, tmp_path, t4x2):
    plot = tmp_path / "points.csv"
    code, _, _ = run(
        capsys,
        "corr",
        "--input",
        t4x2,
        "--format",
        "contingency",
        "--emit-plot",
        str(plot),
    )
    assert code == 0
    lines = plot.read_text().splitlines()
    assert lines[0] == "assignment,re,im"
    assert len(lines) == 8  # header + 6 points + center
    assert lines[-1].startswith("center,")
    first = lines[1].split(",")
    assert float(first[1]) == pytest.approx(0.194, abs=5e-4)
    assert float(first[2]) == pytest.approx(0.104, abs=5e-4)


def test_corr_json_structure(capsys, t4x2):
    _, out, _ = run(
        capsys, "corr", "--input", t4x2, "--format", "contingency", "--out", "json"
    )
    payload = json.loads(out)
    assert payload["count"] == 6
    assert len(payload["sweep"]) == 6
    assert payload["sweep"][0]["assignment"] == {"A": 0, "B": 1, "C": 2}
    re, im = payload["center"]
    assert re == pytest.approx(0.013384, abs=1e-6)
    assert abs(im) < 1e-9


def test_corr_large_sweep_counts_and_center(capsys, tmp_path):
    path = write(
        tmp_path,
        "t5x3.csv",
        ",X,Y,Z\nA,200,120,130\nB,250,100,100\nC,50,80,320\nD,170,130,150\nE,300,100,50\n",
    )
    code, out, _ = run(capsys, "corr", "--input", path, "--format", "contingency")
    assert code == 0
    assert "phase assignments: 120" in out
    assert "center = 0" in out.splitlines()[-1]


def test_corr_rejects_tied_second_variable(capsys, tmp_path):
    # column sums 4 and 4: the second variable cannot be coded with reals
    path = write(tmp_path, "bad.csv", ",X,Y\nA,2,2\nB,2,2\n")
    code, _, err = run(capsys, "corr", "--input", path, "--format", "contingency")
    assert code == 2
    assert "complex coding required" in err


# ---------------------------------------------------------------------------
# model


def test_model_default_degree_invariant(capsys, t4x2):
    code, out, _ = run(capsys, "model", "--input", t4x2, "--format", "contingency")
    assert code == 0
    assert "degree = 3" in out
    assert "invariant: yes" in out
    assert "common correlation = 0.31" in out


def test_model_linear_not_invariant(capsys, t4x2):
    code, out, _ = run(
        capsys, "model", "--input", t4x2, "--format", "contingency", "--degree", "1"
    )
    assert code == 0
    assert "degree = 1" in out
    assert "invariant: no" in out
    assert "5.2+0.012i" in out
    assert "0.067-0.036i" in out


def test_model_json_entries(capsys, t4x2):
    _, out, _ = run(
        capsys,
        "model",
        "--input",
        t4x2,
        "--format",
        "contingency",
        "--degree",
        "1",
        "--out",
        "json",
    )
    payload = json.loads(out)
    assert payload["degree"] == 1
    assert payload["invariant"] is False
    assert len(payload["entries"]) == 6
    b0 = payload["entries"][0]["coefficients"][0]
    assert b0[0] == pytest.approx(5.2, abs=5e-4)
    assert b0[1] == pytest.approx(0.0119, abs=5e-4)
    assert "common_value" not in payload


# ---------------------------------------------------------------------------
# fix-ties


def test_fix_ties_corrected_csv(capsys, t2x2):
    code, out, err = run(capsys, "fix-ties", "--input", t2x2, "--format", "contingency")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "v1,v2"
    assert len(lines) == 8  # header + 7 surviving records
    assert "removed 1 of 8 record(s)" in err
    assert "correction policy:" in err


def test_fix_ties_json(capsys, t4x2):
    code, out, _ = run(
        capsys, "fix-ties", "--input", t4x2, "--format", "contingency", "--out", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["n_removed"] == 4
    assert len(payload["records"]) == 14
    assert payload["removed"][0] == {"index": 9, "v1": "B", "v2": "Y"}


def test_fix_ties_without_ties_exits_2(capsys, t3x2):
    code, _, err = run(capsys, "fix-ties", "--input", t3x2, "--format", "contingency")
    assert code == 2
    assert "nothing to correct" in err


def test_fix_ties_output_retabulates_clean(capsys, t4x2):
    _, out, _ = run(capsys, "fix-ties", "--input", t4x2, "--format", "contingency")
    from collections import Counter

    rows = [l.split(",") for l in out.splitlines()[1:]]
    counts = Counter(r[0] for r in rows)
    assert len(set(counts.values())) == len(counts)


# ---------------------------------------------------------------------------
# errors, exit codes, determinism


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "chi2", "--input", "/nonexistent/nope.csv")
    assert code == 2
    assert "error" in err


def test_malformed_records_reports_line(capsys, tmp_path):
    path = write(tmp_path, "bad.csv", "v1,v2\nA,X\nB\n")
    code, _, err = run(capsys, "chi2", "--input", path)
    assert code == 2
    assert ":3:" in err  # line number of the malformed row


def test_malformed_contingency_cell_reports_line(capsys, tmp_path):
    path = write(tmp_path, "bad.csv", ",X,Y\nA,3,zap\n")
    code, _, err = run(capsys, "chi2", "--input", path, "--format", "contingency")
    assert code == 2
    assert ":2:" in err and "not an integer" in err


def test_usage_error_exits_1(capsys):
    assert run(capsys, "chi2")[0] == 1  # --input missing
    assert run(capsys, "frobnicate", "--input", "x")[0] == 1


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0


def test_decimals_out_of_range_exits_2(capsys, t3x2):
    code, _, err = run(
        capsys, "chi2", "--input", t3x2, "--format", "contingency", "--decimals", "13"
    )
    assert code == 2
    assert "decimals" in err


def test_byte_identical_reruns(capsys, t4x2, tmp_path):
    args = ["corr", "--input", t4x2, "--format", "contingency", "--out", "json"]
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second

    plot = tmp_path / "p.csv"
    for _ in range(2):
        run(capsys, "corr", "--input", t4x2, "--format", "contingency",
            "--emit-plot", str(plot))
        content = plot.read_text()
    run(capsys, "corr", "--input", t4x2, "--format", "contingency",
        "--emit-plot", str(plot))
    assert plot.read_text() == content


def test_warnings_do_not_affect_exit_code(capsys, t3x2):
    code, _, err = run(capsys, "chi2", "--input", t3x2, "--format", "contingency")
    assert code == 0
    assert "warning" in err
