import json
import re

import pytest

from citebenford import DigitDistribution, DomainError, classical, fixtures, uniform
from citebenford.chart import render_svg, write_svg
from citebenford.dataset import CitationSnapshot, SeriesKind, SnapshotSeries, span
from citebenford.gof import Verdict
from citebenford.report import (
    analyze,
    analyze_series,
    render_csv,
    render_json,
    render_series_csv,
    render_series_json,
    render_series_table,
    render_table,
    report_from_dict,
)

SN = fixtures.load_distribution("table2_sn").distribution


@pytest.fixture
def sn_report():
    return analyze(SN, classical(), 0.05, "SN-2013")


def test_table_rendering_matches_published_column(sn_report):
    text = render_table(sn_report)
    for cell in ["69.5 ± 7.0", "40.7 ± 5.8", "28.9 ± 5.0", "11.8 ± 3.3", "10.6 ± 3.2"]:
        assert cell in text
    assert "chi2 = 11.919" in text
    assert "verdict: conforms" in text


def test_rendering_is_pure(sn_report):
    again = analyze(SN, classical(), 0.05, "SN-2013")
    for render in (render_table, render_csv, render_json):
        assert render(sn_report).encode() == render(again).encode()


def test_json_round_trip_exact(sn_report):
    doc = json.loads(render_json(sn_report))
    back = report_from_dict(doc)
    assert back == sn_report
    assert back.gof.chi2 == sn_report.gof.chi2
    assert back.expected.errors == sn_report.expected.errors


def test_json_round_trip_with_span_and_generalized():
    records = [1, 5, 17, 230, 1003, 44, 8]
    from citebenford import generalized, tally

    rep = analyze(tally(records), generalized(1.2), 0.1, "x", span(records), ("note",))
    assert report_from_dict(json.loads(render_json(rep))) == rep


def test_csv(sn_report):
    lines = render_csv(sn_report).splitlines()
    assert lines[0] == "digit,observed,proportion,model_proportion,expected,error,deviation"
    assert lines[1].startswith("1,78,0.338,0.301,69.5,7.0,")
    assert "chi2,11.919" in lines
    assert "verdict,conforms" in lines


def test_report_cross_reference_check(sn_report):
    from citebenford.errors import ContractError
    from citebenford.gof import expected_counts

    with pytest.raises(ContractError):
        type(sn_report)("x", SN, expected_counts(classical(), 10), sn_report.gof)


def test_chart_values(sn_report):
    svg = render_svg(sn_report)
    assert '<rect class="observed" data-digit="1" data-value="0.338"' in svg
    assert '<rect class="model" data-digit="1" data-value="0.301"' in svg
    assert '<line class="uniform" data-value="0.111"' in svg
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")


def test_chart_uniform_model_bars_equal():
    svg = render_svg(analyze(SN, uniform()))
    heights = set(re.findall(r'<rect class="model"[^>]*height="([0-9.]+)"', svg))
    assert len(heights) == 1


def test_chart_deterministic_bytes(tmp_path, sn_report):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    write_svg(sn_report, a)
    write_svg(analyze(SN, classical(), 0.05, "SN-2013"), b)
    assert a.read_bytes() == b.read_bytes()


def test_chart_empty_distribution_writes_nothing(tmp_path, sn_report):
    import copy

    empty = copy.copy(sn_report)
    object.__setattr__(empty, "observed", DigitDistribution(10, (0,) * 9))
    out = tmp_path / "c.svg"
    with pytest.raises(DomainError):
        write_svg(empty, out)
    assert not out.exists()


def test_series_report_from_bundled_table6():
    rep = analyze_series(fixtures.load_series("table6"))
    assert len(rep.rows) == 11
    assert all(r.verdict is Verdict.CONFORMS for r in rep.rows)
    counted = [r for r in rep.rows if r.basis == "counts"]
    assert [r.label for r in counted] == ["1881-2015"]
    assert abs(counted[0].chi2 - 8.792) <= 0.05
    flagged = [r.label for r in rep.rows if r.issues]
    assert flagged == ["1881-2011"]


def test_single_snapshot_series_equals_analysis():
    records = (3, 14, 159, 26, 5, 35, 8, 97, 93, 2, 38, 4, 62, 64, 33, 83, 27, 9, 50, 288, 41, 97, 1, 69, 39)
    snap = CitationSnapshot("s", "only", len(records) + 2, 2, records=records)
    rep = analyze_series(SnapshotSeries(SeriesKind.LIVE_CITED_BY, (snap,)))
    from citebenford import tally

    single = analyze(tally(records))
    assert len(rep.rows) == 1
    assert rep.rows[0].chi2 == single.gof.chi2
    assert rep.rows[0].verdict == single.gof.verdict


def test_series_nesting_violation_in_strict_mode():
    snaps = (
        CitationSnapshot("s", "w1", 2, 0, records=(5, 9)),
        CitationSnapshot("s", "w2", 2, 0, records=(5, 8)),
    )
    series = SnapshotSeries(SeriesKind.FROZEN_CUSTOM_RANGE, snaps)
    strict = analyze_series(series, strict_nesting=True)
    assert strict.errors and strict.rows[1].issues
    lenient = analyze_series(series, strict_nesting=False)
    assert not lenient.errors and lenient.warnings


def test_series_renderings_pure():
    rep = analyze_series(fixtures.load_series("table7"))
    for render in (render_series_table, render_series_csv, render_series_json):
        assert render(rep) == render(analyze_series(fixtures.load_series("table7")))
    doc = json.loads(render_series_json(rep))
    assert len(doc["rows"]) == 18
    assert {row["verdict"] for row in doc["rows"]} == {"conforms"}
