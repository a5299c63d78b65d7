"""Citation snapshots and series: bookkeeping checks, uncited filtering, file I/O.

File formats (UTF-8):

* snapshot document (JSON object)::

    {"seed": "benford1938", "label": "2013-09-30", "kind": "live_cited_by",
     "total_citations": 748, "uncited": 299, "records": [118, 234, ...]}

  ``total_citations`` and ``uncited`` are optional; a missing one is derived
  from the other and the record count. Rows without record-level data may
  carry ``cited`` (the record count) and optionally ``counts`` (first-digit
  counts) and ``chi2`` (a statistic reported elsewhere).
* series document: ``{"kind": ..., "seed": ..., "snapshots": [<snapshot>, ...]}``
* distribution document: ``{"base": 10, "counts": [...], "N": 231,
  "provenance": "..."}``
* plain list: one non-negative number per line; blank lines and ``#``
  comments are skipped; zeros are counted as uncited and dropped.
"""

from __future__ import annotations

import enum
import json
import math
import numbers
import warnings
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence

from citebenford.errors import DomainError, FormatError, ValidationError
from citebenford.sigdigits import DigitDistribution, check_base, tally


class SeriesKind(str, enum.Enum):
    LIVE_CITED_BY = "live_cited_by"
    FROZEN_CUSTOM_RANGE = "frozen_custom_range"


class NestingWarning(UserWarning):
    """A frozen series is not multiset-nested but strict checking was disabled."""


@dataclass(frozen=True)
class CitationSnapshot:
    """Citation counts of the articles citing ``seed``, as seen at ``label``.

    ``records`` holds the positive counts of cited articles. Summary rows
    that only know how many articles were cited set ``records=None`` and
    ``cited`` instead, optionally with digit-level ``counts``.
    """

    seed: str
    label: str
    total_citations: int
    uncited: int
    records: tuple[int, ...] | None = None
    cited: int | None = None
    counts: DigitDistribution | None = None
    reported_chi2: float | None = None
    kind: SeriesKind | None = None

    @property
    def N(self) -> int | None:
        if self.records is not None:
            return len(self.records)
        if self.cited is not None:
            return self.cited
        if self.counts is not None:
            return self.counts.N
        return None

    @classmethod
    def from_raw_counts(cls, seed: str, label: str, raw: Iterable[int], **kw) -> "CitationSnapshot":
        """Build a snapshot from per-article counts including the uncited zeros."""
        records, uncited = filter_uncited(raw)
        return cls(seed, label, uncited + len(records), uncited, records, **kw)


@dataclass(frozen=True)
class SnapshotSeries:
    kind: SeriesKind
    snapshots: tuple[CitationSnapshot, ...]
    seed: str = ""
    provenance: str = ""

    def __post_init__(self):
        object.__setattr__(self, "kind", SeriesKind(self.kind))
        object.__setattr__(self, "snapshots", tuple(self.snapshots))

    def __len__(self) -> int:
        return len(self.snapshots)


@dataclass(frozen=True)
class SpanReport:
    min_record: int
    max_record: int
    orders_of_magnitude: float


@dataclass(frozen=True)
class DistributionFixture:
    distribution: DigitDistribution
    provenance: str = ""
    reference: dict[str, Any] = field(default_factory=dict)


def _is_int(v) -> bool:
    return isinstance(v, numbers.Integral) and not isinstance(v, bool)


def check_snapshot(s: CitationSnapshot) -> list[str]:
    """Every bookkeeping violation in ``s``; empty when valid."""
    errors = []
    for name in ("total_citations", "uncited"):
        v = getattr(s, name)
        if not _is_int(v) or v < 0:
            errors.append(f"{name} must be a non-negative integer, got {v!r}")
    if s.records is not None:
        bad = [(i, r) for i, r in enumerate(s.records) if not _is_int(r) or r < 1]
        for i, r in bad[:5]:
            errors.append(f"records[{i}] must be a positive integer, got {r!r}")
        if len(bad) > 5:
            errors.append(f"... and {len(bad) - 5} more non-positive records")
        if s.cited is not None and s.cited != len(s.records):
            errors.append(f"cited count {s.cited} disagrees with {len(s.records)} records")
        if not s.records and s.cited:
            errors.append(f"records are empty but cited count is {s.cited}")
    if s.cited is not None and (not _is_int(s.cited) or s.cited < 0):
        errors.append(f"cited must be a non-negative integer, got {s.cited!r}")
    n = s.N
    if n is None:
        errors.append("no cited count: give records, cited or counts")
    elif s.counts is not None and s.counts.N != n:
        errors.append(f"digit counts sum to {s.counts.N} but the snapshot has {n} cited articles")
    if n is not None and _is_int(s.total_citations) and _is_int(s.uncited):
        if s.total_citations != s.uncited + n:
            errors.append(
                f"total ≠ uncited + cited ({s.total_citations} ≠ {s.uncited + n})"
            )
    return errors


def validate_snapshot(s: CitationSnapshot) -> CitationSnapshot:
    errors = check_snapshot(s)
    if errors:
        raise ValidationError(errors, f"snapshot {s.label!r}")
    return s


def filter_uncited(raw_counts: Iterable[int]) -> tuple[tuple[int, ...], int]:
    """Split per-article counts into positive records and the number of zeros.

    >>> filter_uncited([0, 5, 0, 1])
    ((5, 1), 2)
    """
    records = []
    uncited = 0
    for i, c in enumerate(raw_counts):
        if not _is_int(c):
            raise DomainError(f"count at index {i} must be an integer, got {c!r}")
        if c < 0:
            raise DomainError(f"count at index {i} is negative ({c})")
        if c == 0:
            uncited += 1
        else:
            records.append(int(c))
    return tuple(records), uncited


def span(records: Sequence[int]) -> SpanReport:
    """How many decades the records cover: ``log10(max / min)``."""
    if len(records) == 0:
        raise DomainError("cannot measure the span of an empty record list")
    lo, hi = min(records), max(records)
    if lo <= 0:
        raise DomainError(f"records must be positive, found {lo}")
    return SpanReport(lo, hi, math.log10(hi / lo))


def check_series(series: SnapshotSeries, strict_nesting: bool = True) -> tuple[list[str], list[str]]:
    """Return ``(errors, warnings)`` for ``series``.

    Totals must never decrease. In a frozen custom-range series each
    snapshot's records must also be contained, as a multiset, in the next
    one's; with ``strict_nesting=False`` that check only warns. Snapshots
    without record-level data are skipped by the nesting check.
    """
    errors: list[str] = []
    notes: list[str] = []
    if not series.snapshots:
        return ["series has no snapshots"], notes
    for s in series.snapshots:
        errors.extend(f"{s.label}: {e}" for e in check_snapshot(s))
    for prev, cur in zip(series.snapshots, series.snapshots[1:]):
        if _is_int(prev.total_citations) and _is_int(cur.total_citations):
            if cur.total_citations < prev.total_citations:
                errors.append(
                    f"{cur.label}: total decreases from {prev.total_citations} ({prev.label}) "
                    f"to {cur.total_citations}"
                )
        if series.kind is SeriesKind.FROZEN_CUSTOM_RANGE and prev.records is not None and cur.records is not None:
            missing = Counter(prev.records) - Counter(cur.records)
            if missing:
                shown = ", ".join(f"{v}×{k}" if k > 1 else str(v) for v, k in sorted(missing.items())[:5])
                msg = f"{cur.label}: records of {prev.label} not contained in this window (missing {shown})"
                (errors if strict_nesting else notes).append(msg)
    return errors, notes


def validate_series(series: SnapshotSeries, strict_nesting: bool = True) -> SnapshotSeries:
    errors, notes = check_series(series, strict_nesting)
    if errors:
        raise ValidationError(errors, f"{series.kind.value} series")
    for note in notes:
        warnings.warn(note, NestingWarning, stacklevel=2)
    return series


def snapshot_to_distribution(s: CitationSnapshot, base: int = 10) -> DigitDistribution:
    base = check_base(base)
    if s.records is not None:
        if not s.records:
            raise DomainError("no cited articles to analyze")
        return tally(s.records, base)
    if s.counts is not None:
        if s.counts.base != base:
            raise DomainError(f"snapshot {s.label!r} has base {s.counts.base} digit counts, not base {base}")
        if s.counts.N == 0:
            raise DomainError("no cited articles to analyze")
        return s.counts
    raise DomainError(f"snapshot {s.label!r} has no record-level data to analyze")


# -- file formats -------------------------------------------------------------


def read_json(path: str | Path) -> dict:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"{path}: cannot read ({exc.strerror or exc})") from None
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: not UTF-8 ({exc.reason})") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise FormatError(f"{path}: top-level JSON value must be an object")
    return doc


def document_kind(doc: dict) -> str:
    if "snapshots" in doc:
        return "series"
    if "records" in doc or "seed" in doc or "label" in doc:
        return "snapshot"
    if "counts" in doc:
        return "distribution"
    raise FormatError("unrecognized document: expected 'snapshots', 'records' or 'counts'")


def _field(doc: dict, name: str, where: str, required: bool = True):
    if name not in doc:
        if required:
            raise FormatError(f"{where}missing field '{name}'")
        return None
    return doc[name]


def _int_field(doc: dict, name: str, where: str, required: bool = True) -> int | None:
    v = _field(doc, name, where, required)
    if v is None:
        return None
    if not _is_int(v):
        raise FormatError(f"{where}field '{name}' must be an integer, got {v!r}")
    return v


def _int_list(v, name: str, where: str) -> list[int]:
    if not isinstance(v, list):
        raise FormatError(f"{where}field '{name}' must be an array of integers")
    for i, x in enumerate(v):
        if not _is_int(x):
            raise FormatError(f"{where}field '{name}[{i}]' must be an integer, got {x!r}")
    return v


def distribution_from_dict(doc: dict, where: str = "") -> DistributionFixture:
    base = _int_field(doc, "base", where, required=False) or 10
    counts = _int_list(_field(doc, "counts", where), "counts", where)
    try:
        dist = DigitDistribution(base, tuple(counts))
    except (DomainError, ValueError) as exc:
        raise FormatError(f"{where}field 'counts': {exc}") from None
    n = _int_field(doc, "N", where, required=False)
    if n is not None and n != dist.N:
        raise FormatError(f"{where}field 'N' is {n} but counts sum to {dist.N}")
    provenance = doc.get("provenance", "")
    if not isinstance(provenance, str):
        raise FormatError(f"{where}field 'provenance' must be a string")
    reference = doc.get("printed", {})
    return DistributionFixture(dist, provenance, reference)


def distribution_to_dict(fixture: DistributionFixture) -> dict:
    out = {
        "base": fixture.distribution.base,
        "counts": list(fixture.distribution.counts),
        "N": fixture.distribution.N,
        "provenance": fixture.provenance,
    }
    if fixture.reference:
        out["printed"] = fixture.reference
    return out


def snapshot_from_dict(doc: dict, where: str = "", default_seed: str = "") -> CitationSnapshot:
    if not isinstance(doc, dict):
        raise FormatError(f"{where}snapshot must be a JSON object")
    seed = doc.get("seed", default_seed)
    label = _field(doc, "label", where)
    if not isinstance(seed, str) or not isinstance(label, str):
        raise FormatError(f"{where}fields 'seed' and 'label' must be strings")
    kind = doc.get("kind")
    if kind is not None:
        try:
            kind = SeriesKind(kind)
        except ValueError:
            raise FormatError(f"{where}field 'kind' must be one of {[k.value for k in SeriesKind]}, got {kind!r}") from None
    records = doc.get("records")
    if records is not None:
        records = tuple(_int_list(records, "records", where))
    cited = _int_field(doc, "cited", where, required=False)
    counts = None
    if "counts" in doc:
        counts = distribution_from_dict(
            {"base": doc.get("base", 10), "counts": doc["counts"]}, where
        ).distribution
    chi2 = doc.get("chi2")
    if chi2 is not None and (isinstance(chi2, bool) or not isinstance(chi2, (int, float))):
        raise FormatError(f"{where}field 'chi2' must be a number, got {chi2!r}")
    n = len(records) if records is not None else cited if cited is not None else counts.N if counts else None
    total = _int_field(doc, "total_citations", where, required=False)
    uncited = _int_field(doc, "uncited", where, required=False)
    if n is None and (total is None or uncited is None):
        raise FormatError(f"{where}need 'records', 'cited' or 'counts' to know the cited count")
    if total is None:
        total = (uncited or 0) + n
    if uncited is None:
        uncited = total - n
        if uncited < 0:
            raise FormatError(f"{where}field 'total_citations' ({total}) is smaller than the {n} cited records")
    return CitationSnapshot(
        seed, label, total, uncited, records, cited, counts,
        None if chi2 is None else float(chi2), kind,
    )


def snapshot_to_dict(s: CitationSnapshot) -> dict:
    out: dict[str, Any] = {"seed": s.seed, "label": s.label}
    if s.kind is not None:
        out["kind"] = s.kind.value
    out["total_citations"] = s.total_citations
    out["uncited"] = s.uncited
    if s.records is not None:
        out["records"] = list(s.records)
    if s.cited is not None:
        out["cited"] = s.cited
    if s.counts is not None:
        if s.counts.base != 10:
            out["base"] = s.counts.base
        out["counts"] = list(s.counts.counts)
    if s.reported_chi2 is not None:
        out["chi2"] = s.reported_chi2
    return out


def series_from_dict(doc: dict, where: str = "") -> SnapshotSeries:
    try:
        kind = SeriesKind(_field(doc, "kind", where))
    except ValueError:
        raise FormatError(f"{where}field 'kind' must be one of {[k.value for k in SeriesKind]}") from None
    seed = doc.get("seed", "")
    items = _field(doc, "snapshots", where)
    if not isinstance(items, list):
        raise FormatError(f"{where}field 'snapshots' must be an array")
    snaps = tuple(
        snapshot_from_dict(item, f"{where}snapshots[{i}]: ", default_seed=seed) for i, item in enumerate(items)
    )
    provenance = doc.get("provenance", "")
    if not isinstance(provenance, str):
        raise FormatError(f"{where}field 'provenance' must be a string")
    return SnapshotSeries(kind, snaps, seed, provenance)


def series_to_dict(series: SnapshotSeries) -> dict:
    out: dict[str, Any] = {"kind": series.kind.value, "seed": series.seed}
    if series.provenance:
        out["provenance"] = series.provenance
    return out | {
        "snapshots": [snapshot_to_dict(s) for s in series.snapshots],
    }


def load_snapshot(path: str | Path) -> CitationSnapshot:
    return snapshot_from_dict(read_json(path), f"{path}: ")


def load_series(path: str | Path) -> SnapshotSeries:
    return series_from_dict(read_json(path), f"{path}: ")


def load_distribution(path: str | Path) -> DistributionFixture:
    return distribution_from_dict(read_json(path), f"{path}: ")


def parse_plain_list(lines: Iterable[str], where: str = "") -> tuple[list, int]:
    """Parse a plain list; returns ``(positive values, number of zeros)``."""
    values: list = []
    zeros = 0
    for lineno, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            v: int | float = int(text)
        except ValueError:
            try:
                v = float(text)
            except ValueError:
                raise FormatError(f"{where}line {lineno}: not a number: {text!r}") from None
            if not math.isfinite(v):
                raise FormatError(f"{where}line {lineno}: value must be finite, got {text!r}")
        if v < 0:
            raise FormatError(f"{where}line {lineno}: negative value {text}")
        if v == 0:
            zeros += 1
        else:
            values.append(v)
    return values, zeros


def load_plain_list(path: str | Path) -> tuple[list, int]:
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as fh:
            return parse_plain_list(fh, f"{path}: ")
    except OSError as exc:
        raise FormatError(f"{path}: cannot read ({exc.strerror or exc})") from None
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: not UTF-8 ({exc.reason})") from None


def write_plain_list(path: str | Path, values: Iterable) -> None:
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        for v in values:
            fh.write(f"{v!r}\n" if isinstance(v, float) else f"{v}\n")
