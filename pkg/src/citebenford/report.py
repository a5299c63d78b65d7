"""Analysis and series reports and their text, CSV and JSON renderings.

Rendering is pure: equal reports give byte-identical output. Proportions are
printed to 3 decimals and expected counts to 1, as in the published tables.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable

from citebenford.dataset import CitationSnapshot, SnapshotSeries, SpanReport, check_series, snapshot_to_distribution
from citebenford.errors import ContractError
from citebenford.gof import (
    DEFAULT_ALPHA,
    ExpectedDistribution,
    GofResult,
    Verdict,
    chi_square_critical,
    conformity_test,
    degrees_of_freedom,
    digit_deviations,
    expected_counts,
    reported_verdict,
)
from citebenford.models import DigitLawModel, LawKind, classical
from citebenford.sigdigits import DigitDistribution, digit_symbol

FORMATS = ("table", "csv", "json")


@dataclass(frozen=True)
class AnalysisReport:
    source: str
    observed: DigitDistribution
    expected: ExpectedDistribution
    gof: GofResult
    span: SpanReport | None = None
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if self.observed.N != self.expected.N:
            raise ContractError(f"observed N={self.observed.N} but expected N={self.expected.N}")
        if self.observed.base != self.expected.base:
            raise ContractError(f"observed base {self.observed.base} but model base {self.expected.base}")

    @property
    def model(self) -> DigitLawModel:
        return self.expected.model

    @property
    def deviations(self) -> tuple[float, ...]:
        return digit_deviations(self.observed, self.expected)

    @property
    def model_proportions(self) -> tuple[float, ...]:
        return tuple(e / self.expected.N for e in self.expected.expected)


def analyze(
    observed: DigitDistribution,
    model: DigitLawModel | None = None,
    alpha: float = DEFAULT_ALPHA,
    source: str = "",
    span: SpanReport | None = None,
    warnings: tuple[str, ...] = (),
) -> AnalysisReport:
    model = model or classical(observed.base)
    gof = conformity_test(observed, model, alpha)
    return AnalysisReport(
        source, observed, expected_counts(model, observed.N), gof, span, tuple(warnings) + gof.warnings
    )


def _model_to_dict(model: DigitLawModel) -> dict:
    out = {"kind": model.kind.value, "base": model.base}
    if model.beta is not None:
        out["beta"] = model.beta
    return out


def _model_from_dict(doc: dict) -> DigitLawModel:
    return DigitLawModel(LawKind(doc["kind"]), doc["base"], doc.get("beta"))


def report_to_dict(report: AnalysisReport) -> dict:
    g = report.gof
    out = {
        "source": report.source,
        "model": _model_to_dict(report.model),
        "base": report.observed.base,
        "N": report.observed.N,
        "digits": [
            {
                "digit": d,
                "observed": o,
                "expected": e,
                "error": s,
                "deviation": z,
            }
            for d, o, e, s, z in zip(
                report.observed.digits,
                report.observed.counts,
                report.expected.expected,
                report.expected.errors,
                report.deviations,
            )
        ],
        "chi2": g.chi2,
        "df": g.df,
        "alpha": g.alpha,
        "critical": g.critical,
        "p_value": g.p_value,
        "verdict": g.verdict.value,
        "gof_warnings": list(g.warnings),
        "warnings": list(report.warnings),
    }
    if report.span is not None:
        out["span"] = {
            "min_record": report.span.min_record,
            "max_record": report.span.max_record,
            "orders_of_magnitude": report.span.orders_of_magnitude,
        }
    return out


def report_from_dict(doc: dict) -> AnalysisReport:
    model = _model_from_dict(doc["model"])
    digits = doc["digits"]
    observed = DigitDistribution(doc["base"], tuple(row["observed"] for row in digits))
    expected = ExpectedDistribution(
        tuple(row["expected"] for row in digits), tuple(row["error"] for row in digits), doc["N"], model
    )
    gof = GofResult(
        doc["chi2"], doc["df"], doc["alpha"], doc["critical"], doc["p_value"],
        Verdict(doc["verdict"]), tuple(doc.get("gof_warnings", ())),
    )
    sp = doc.get("span")
    span = SpanReport(sp["min_record"], sp["max_record"], sp["orders_of_magnitude"]) if sp else None
    return AnalysisReport(doc["source"], observed, expected, gof, span, tuple(doc.get("warnings", ())))


def render_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def render_table(report: AnalysisReport) -> str:
    g = report.gof
    obs = report.observed
    lines = []
    if report.source:
        lines.append(f"source: {report.source}")
    lines.append(f"model:  {report.model.describe()}")
    lines.append(f"N = {obs.N}")
    lines.append("")
    lines.append(f"{'digit':>5}  {'observed':>8}  {'prop':>6}  {'model':>6}  {'expected ± error':>16}  {'z':>6}")
    for d, o, p, m, e, s, z in zip(
        obs.digits,
        obs.counts,
        obs.proportions(),
        report.model_proportions,
        report.expected.expected,
        report.expected.errors,
        report.deviations,
    ):
        cell = f"{e:.1f} ± {s:.1f}"
        lines.append(f"{digit_symbol(d):>5}  {o:>8}  {p:>6.3f}  {m:>6.3f}  {cell:>16}  {z:>+6.2f}")
    lines.append("")
    lines.append(
        f"chi2 = {g.chi2:.3f}  df = {g.df}  critical({g.alpha:g}) = {g.critical:.3f}  p = {g.p_value:.4f}"
    )
    lines.append(f"verdict: {g.verdict.value}")
    if report.span is not None:
        sp = report.span
        lines.append(f"span: {sp.min_record} .. {sp.max_record} ({sp.orders_of_magnitude:.2f} orders of magnitude)")
    for w in report.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def render_csv(report: AnalysisReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["digit", "observed", "proportion", "model_proportion", "expected", "error", "deviation"])
    for d, o, p, m, e, s, z in zip(
        report.observed.digits,
        report.observed.counts,
        report.observed.proportions(),
        report.model_proportions,
        report.expected.expected,
        report.expected.errors,
        report.deviations,
    ):
        w.writerow([d, o, f"{p:.3f}", f"{m:.3f}", f"{e:.1f}", f"{s:.1f}", f"{z:.3f}"])
    g = report.gof
    w.writerow([])
    w.writerow(["statistic", "value"])
    for key, value in (
        ("N", report.observed.N),
        ("chi2", f"{g.chi2:.3f}"),
        ("df", g.df),
        ("alpha", f"{g.alpha:g}"),
        ("critical", f"{g.critical:.3f}"),
        ("p_value", f"{g.p_value:.4f}"),
        ("verdict", g.verdict.value),
    ):
        w.writerow([key, value])
    return buf.getvalue()


RENDERERS: dict[str, Callable[[AnalysisReport], str]] = {
    "table": render_table,
    "csv": render_csv,
    "json": render_json,
}


# -- series -------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesRow:
    label: str
    total: int
    uncited: int
    N: int | None
    chi2: float | None
    reported_chi2: float | None
    verdict: Verdict | None
    basis: str  # "records", "counts", "reported" or "none"
    issues: tuple[str, ...] = ()


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    seed: str
    rows: tuple[SeriesRow, ...]
    errors: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()
    alpha: float = DEFAULT_ALPHA
    critical: float = 0.0
    provenance: str = ""

    @property
    def all_conform(self) -> bool:
        return all(r.verdict is Verdict.CONFORMS for r in self.rows)


def _row(s: CitationSnapshot, model: DigitLawModel, alpha: float, issues: tuple[str, ...]) -> SeriesRow:
    if s.records is not None or s.counts is not None:
        dist = snapshot_to_distribution(s, model.base)
        g = conformity_test(dist, model, alpha)
        basis = "records" if s.records is not None else "counts"
        return SeriesRow(s.label, s.total_citations, s.uncited, s.N, g.chi2, s.reported_chi2, g.verdict, basis, issues)
    if s.reported_chi2 is not None:
        g = reported_verdict(s.reported_chi2, model.base, alpha)
        return SeriesRow(s.label, s.total_citations, s.uncited, s.N, None, s.reported_chi2, g.verdict, "reported", issues)
    return SeriesRow(s.label, s.total_citations, s.uncited, s.N, None, None, None, "none", issues)


def analyze_series(
    series: SnapshotSeries,
    model: DigitLawModel | None = None,
    alpha: float = DEFAULT_ALPHA,
    strict_nesting: bool = True,
) -> SeriesReport:
    """One row per snapshot. Validation problems are attached, not raised."""
    model = model or classical()
    errors, notes = check_series(series, strict_nesting)
    rows = []
    for s in series.snapshots:
        mine = tuple(e for e in errors if e.startswith(f"{s.label}: "))
        rows.append(_row(s, model, alpha, mine))
    critical = chi_square_critical(degrees_of_freedom(model.base), alpha)
    return SeriesReport(
        series.kind.value, series.seed, tuple(rows), tuple(errors), tuple(notes), alpha, critical, series.provenance
    )


def _fmt(v: float | None, spec: str = ".3f") -> str:
    return "-" if v is None else format(v, spec)


def render_series_table(rep: SeriesReport) -> str:
    lines = [f"series: {rep.seed or '?'} ({rep.kind})"]
    if rep.provenance:
        lines.append(f"source: {rep.provenance}")
    lines.append(f"critical chi2 at alpha {rep.alpha:g}: {rep.critical:.3f}")
    lines.append("")
    lines.append(f"{'label':<12}  {'total':>6}  {'uncited':>7}  {'N':>5}  {'chi2':>8}  {'reported':>8}  {'basis':<8}  verdict")
    for r in rep.rows:
        verdict = r.verdict.value if r.verdict else "-"
        flag = "  !" if r.issues else ""
        lines.append(
            f"{r.label:<12}  {r.total:>6}  {r.uncited:>7}  {_fmt(r.N, 'd'):>5}  {_fmt(r.chi2):>8}  "
            f"{_fmt(r.reported_chi2):>8}  {r.basis:<8}  {verdict}{flag}"
        )
    if rep.errors:
        lines.append("")
        lines.extend(f"error: {e}" for e in rep.errors)
    lines.extend(f"warning: {w}" for w in rep.warnings)
    return "\n".join(lines) + "\n"


def series_to_dict(rep: SeriesReport) -> dict:
    return {
        "kind": rep.kind,
        "seed": rep.seed,
        "provenance": rep.provenance,
        "alpha": rep.alpha,
        "critical": rep.critical,
        "rows": [
            {
                "label": r.label,
                "total": r.total,
                "uncited": r.uncited,
                "N": r.N,
                "chi2": r.chi2,
                "reported_chi2": r.reported_chi2,
                "verdict": r.verdict.value if r.verdict else None,
                "basis": r.basis,
                "issues": list(r.issues),
            }
            for r in rep.rows
        ],
        "errors": list(rep.errors),
        "warnings": list(rep.warnings),
    }


def render_series_json(rep: SeriesReport) -> str:
    return json.dumps(series_to_dict(rep), indent=2, ensure_ascii=False) + "\n"


def render_series_csv(rep: SeriesReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["label", "total", "uncited", "N", "chi2", "reported_chi2", "basis", "verdict", "issues"])
    for r in rep.rows:
        w.writerow([
            r.label, r.total, r.uncited, "" if r.N is None else r.N,
            "" if r.chi2 is None else f"{r.chi2:.3f}",
            "" if r.reported_chi2 is None else f"{r.reported_chi2:.3f}",
            r.basis, r.verdict.value if r.verdict else "", "; ".join(r.issues),
        ])
    return buf.getvalue()


SERIES_RENDERERS: dict[str, Callable[[SeriesReport], str]] = {
    "table": render_series_table,
    "csv": render_series_csv,
    "json": render_series_json,
}
