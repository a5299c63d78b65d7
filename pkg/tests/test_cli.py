import json

import pytest

from citebenford.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_bundled_sn(capsys):
    code, out, _ = run(capsys, "analyze", "bundled:table2_sn")
    assert code == 0
    assert "69.5 ± 7.0" in out and "chi2 = 11.919" in out and "verdict: conforms" in out


def test_analyze_json_format(capsys):
    code, out, _ = run(capsys, "analyze", "bundled:table5_fb", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "conforms" and abs(doc["chi2"] - 7.176) <= 0.05


def test_analyze_csv_to_file(tmp_path, capsys):
    out = tmp_path / "r.csv"
    code, stdout, _ = run(capsys, "analyze", "bundled:table2_fb", "--format", "csv", "--out", str(out))
    assert code == 0 and stdout == ""
    assert "chi2,7.623" in out.read_text()


def test_analyze_empty_list_is_error(tmp_path, capsys):
    p = tmp_path / "empty.txt"
    p.write_text("0\n0\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 1 and "no positive values" in err


def test_analyze_bad_line_named(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("3\n4\nfoo\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 1 and "line 3" in err


def test_analyze_uniform_model_rejects_benford_sample(tmp_path, capsys):
    sample = tmp_path / "s.txt"
    assert run(capsys, "synth", "--law", "benford", "--n", "10000", "--seed", "4", "--out", str(sample))[0] == 0
    code, out, _ = run(capsys, "analyze", str(sample), "--model", "uniform")
    assert code == 2 and "verdict: rejects" in out
    code, out, _ = run(capsys, "analyze", str(sample))
    assert code == 0


def test_analyze_snapshot_file(tmp_path, capsys):
    p = tmp_path / "snap.json"
    p.write_text(json.dumps({"seed": "benford1938", "label": "demo", "total_citations": 5, "uncited": 2, "records": [118, 234, 342]}))
    code, out, _ = run(capsys, "analyze", str(p))
    assert code == 0
    assert "span: 118 .. 342" in out


def test_analyze_invalid_snapshot(tmp_path, capsys):
    p = tmp_path / "snap.json"
    p.write_text(json.dumps({"seed": "x", "label": "y", "total_citations": 100, "uncited": 10, "records": [1] * 80}))
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 1 and "100 ≠ 90" in err


def test_analyze_generalized_needs_beta(capsys):
    code, _, err = run(capsys, "analyze", "bundled:table2_sn", "--model", "generalized")
    assert code == 1 and "beta" in err
    code, _, _ = run(capsys, "analyze", "bundled:table2_sn", "--model", "generalized", "--beta", "1.0")
    assert code == 0


def test_analyze_unknown_bundle(capsys):
    code, _, err = run(capsys, "analyze", "bundled:table9")
    assert code == 1 and "table2_sn" in err


def test_analyze_rejects_series_document(capsys):
    code, _, err = run(capsys, "analyze", "bundled:table6")
    assert code == 1 and "series" in err


def test_series_bundled_table7(capsys):
    code, out, _ = run(capsys, "series", "bundled:table7")
    assert code == 0
    assert out.count("conforms") == 18


def test_series_bundled_table6_flags_bookkeeping(capsys):
    code, out, _ = run(capsys, "series", "bundled:table6", "--format", "json")
    doc = json.loads(out)
    assert [r["verdict"] for r in doc["rows"]] == ["conforms"] * 11
    assert code == 1
    assert any("331 ≠ 339" in e for e in doc["errors"])


def test_series_strict_nesting_flag(tmp_path, capsys):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({
        "kind": "frozen_custom_range", "seed": "x",
        "snapshots": [{"label": "a", "records": [5, 9] * 20}, {"label": "b", "records": [5, 8] * 20}],
    }))
    code, out, _ = run(capsys, "series", str(p))
    assert code == 1 and "not contained" in out
    code, out, _ = run(capsys, "series", str(p), "--no-strict-nesting")
    assert code in (0, 2) and "warning" in out


def test_synth_deterministic(capsys):
    a = run(capsys, "synth", "--law", "zipf", "--beta", "1.5", "--n", "50", "--seed", "9")[1]
    b = run(capsys, "synth", "--law", "zipf", "--beta", "1.5", "--n", "50", "--seed", "9")[1]
    assert a == b and len(a.splitlines()) == 50


def test_synth_integers(capsys):
    out = run(capsys, "synth", "--n", "20", "--integers", "--seed", "2")[1]
    assert all(line.isdigit() and int(line) >= 1 for line in out.splitlines())


def test_chart_command(tmp_path, capsys):
    out = tmp_path / "sn.svg"
    code, _, _ = run(capsys, "chart", "bundled:table2_sn", "--out", str(out))
    assert code == 0
    svg = out.read_text()
    assert 'data-digit="1" data-value="0.338"' in svg


def test_chart_empty_no_file(tmp_path, capsys):
    src = tmp_path / "zeros.txt"
    src.write_text("0\n")
    out = tmp_path / "x.svg"
    code, _, _ = run(capsys, "chart", str(src), "--out", str(out))
    assert code == 1 and not out.exists()


@pytest.mark.parametrize("table, code", [(3, 0), (4, 0), (6, 0), (7, 0)])
def test_reproduce_verdict_tables(capsys, table, code):
    rc, out, _ = run(capsys, "reproduce", str(table))
    assert rc == code and out.rstrip().endswith("PASS")


def test_reproduce_table7_has_18_verdicts(capsys):
    _, out, _ = run(capsys, "reproduce", "7", "--format", "json")
    doc = json.loads(out)
    assert len(doc["checks"]) == 18 and doc["passed"]


@pytest.mark.parametrize("table, chi2", [(2, ("11.919", "7.623")), (5, ("8.792", "7.17"))])
def test_reproduce_distribution_tables_chi2_pass(capsys, table, chi2):
    _, out, _ = run(capsys, "reproduce", str(table), "--format", "json")
    doc = json.loads(out)
    chi_checks = [c for c in doc["checks"] if c["name"].endswith("chi2")]
    assert len(chi_checks) == 2 and all(c["passed"] for c in chi_checks)


def test_reproduce_unknown_table(capsys):
    with pytest.raises(SystemExit):
        main(["reproduce", "8"])


def test_validate_command(tmp_path, capsys):
    assert run(capsys, "validate", "bundled:table7")[0] == 0
    code, out, _ = run(capsys, "validate", "bundled:table6")
    assert code == 1 and "1881-2011" in out
    p = tmp_path / "l.txt"
    p.write_text("1\n0\n5\n")
    code, out, _ = run(capsys, "validate", str(p))
    assert code == 0 and "2 positive values, 1 zeros" in out


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "citebenford", "reproduce", "3"], capture_output=True, text=True)
    assert res.returncode == 0 and "PASS" in res.stdout
