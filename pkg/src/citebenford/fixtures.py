"""Bundled data transcribed from the published tables.

Only digit-count vectors (tables 2 and 5) and per-row totals and chi-square
statistics (tables 3, 4, 6 and 7) were published, so no record-level data is
bundled.
"""

from __future__ import annotations

import json
from importlib import resources

from citebenford.dataset import (
    DistributionFixture,
    SnapshotSeries,
    distribution_from_dict,
    series_from_dict,
)

DISTRIBUTIONS = ("table2_sn", "table2_fb", "table5_sn", "table5_fb")
SERIES = ("table3", "table4", "table6", "table7")
BUNDLED_PREFIX = "bundled:"


def _read(name: str) -> dict:
    text = resources.files("citebenford").joinpath("data", f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def names() -> tuple[str, ...]:
    return DISTRIBUTIONS + SERIES


def load_distribution(name: str) -> DistributionFixture:
    if name not in DISTRIBUTIONS:
        raise KeyError(f"no bundled distribution {name!r}; choose from {', '.join(DISTRIBUTIONS)}")
    return distribution_from_dict(_read(name), f"bundled:{name}: ")


def load_series(name: str) -> SnapshotSeries:
    if name not in SERIES:
        raise KeyError(f"no bundled series {name!r}; choose from {', '.join(SERIES)}")
    return series_from_dict(_read(name), f"bundled:{name}: ")


def raw_document(name: str) -> dict:
    if name not in names():
        raise KeyError(f"no bundled fixture {name!r}")
    return _read(name)
