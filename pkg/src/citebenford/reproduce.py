"""Recompute the published tables from the bundled fixtures and diff them."""

from __future__ import annotations

import json
from dataclasses import dataclass

from citebenford import fixtures
from citebenford.errors import DomainError
from citebenford.gof import DEFAULT_ALPHA, Verdict, chi_square, expected_counts, reported_verdict
from citebenford.models import classical

TABLE_IDS = (2, 3, 4, 5, 6, 7)
TOLERANCE = 0.05

_DISTRIBUTION_TABLES = {2: ("table2_sn", "table2_fb"), 5: ("table5_sn", "table5_fb")}
_SERIES_TABLES = {3: "table3", 4: "table4", 6: "table6", 7: "table7"}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class Reproduction:
    table: int
    checks: tuple[Check, ...]
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _within(a: float, b: float, tol: float = TOLERANCE) -> bool:
    # the slack absorbs binary representation of decimal literals
    return abs(a - b) <= tol + 1e-9


def _distribution_checks(name: str) -> list[Check]:
    fx = fixtures.load_distribution(name)
    printed = fx.reference
    dist = fx.distribution
    exp = expected_counts(classical(dist.base), dist.N)
    chi2 = chi_square(dist, exp)
    checks = [
        Check(
            f"{name} chi2",
            _within(chi2, printed["chi2"]),
            f"computed {chi2:.3f}, printed {printed['chi2']:.3f}",
        )
    ]
    for label, ours, theirs in (("expected", exp.expected, printed["expected"]), ("error", exp.errors, printed["errors"])):
        for d, (a, b) in enumerate(zip(ours, theirs), start=1):
            shown = round(a, 1)
            checks.append(
                Check(
                    f"{name} digit {d} {label}",
                    _within(shown, b),
                    f"computed {a:.4f} -> {shown:.1f}, printed {b:.1f}",
                )
            )
    return checks


def _series_checks(name: str, alpha: float) -> tuple[list[Check], list[str]]:
    series = fixtures.load_series(name)
    checks = []
    notes = []
    for s in series.snapshots:
        g = reported_verdict(s.reported_chi2, 10, alpha)
        checks.append(
            Check(
                f"{name} {s.label} verdict",
                g.verdict is Verdict.CONFORMS,
                f"chi2 {s.reported_chi2:.3f} vs critical {g.critical:.3f}: {g.verdict.value} (printed: Yes)",
            )
        )
        if s.total_citations != s.uncited + s.N:
            notes.append(
                f"{s.label}: printed total {s.total_citations} ≠ uncited + cited "
                f"({s.uncited} + {s.N} = {s.uncited + s.N})"
            )
    return checks, notes


def reproduce(table: int, alpha: float = DEFAULT_ALPHA) -> Reproduction:
    """Table 2 or 5: recompute expected counts, errors and chi2 from the digit
    counts. Tables 3, 4, 6, 7: map each printed chi2 to a verdict."""
    if table in _DISTRIBUTION_TABLES:
        checks = [c for name in _DISTRIBUTION_TABLES[table] for c in _distribution_checks(name)]
        return Reproduction(table, tuple(checks))
    if table in _SERIES_TABLES:
        checks, notes = _series_checks(_SERIES_TABLES[table], alpha)
        return Reproduction(table, tuple(checks), tuple(notes))
    raise DomainError(f"unknown table {table!r}; choose from {', '.join(map(str, TABLE_IDS))}")


def render(rep: Reproduction, verbose: bool = False) -> str:
    lines = [f"Table {rep.table}"]
    for c in rep.checks:
        if verbose or not c.passed or "chi2" in c.name or "verdict" in c.name:
            lines.append(f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
    n_ok = sum(c.passed for c in rep.checks)
    lines.append(f"  {n_ok}/{len(rep.checks)} checks within ±{TOLERANCE}")
    lines.extend(f"  note: {n}" for n in rep.notes)
    lines.append("PASS" if rep.passed else "FAIL")
    return "\n".join(lines) + "\n"


def render_json(rep: Reproduction) -> str:
    doc = {
        "table": rep.table,
        "passed": rep.passed,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in rep.checks],
        "notes": list(rep.notes),
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
