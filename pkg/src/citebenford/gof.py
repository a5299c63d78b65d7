"""Expected counts, binomial error bars, Pearson chi-square and verdicts."""

from __future__ import annotations

import enum
import math
import numbers
from dataclasses import dataclass, field

from citebenford.errors import ContractError, DomainError
from citebenford.models import DigitLawModel, classical, probability_vector
from citebenford.sigdigits import DigitDistribution
from citebenford.special import chi2_sf

DEFAULT_ALPHA = 0.05
MAX_DF = 200
# Pearson's approximation is doubtful below this expected count per cell.
MIN_EXPECTED = 5.0


class Verdict(str, enum.Enum):
    CONFORMS = "conforms"
    REJECTS = "rejects"


@dataclass(frozen=True)
class ExpectedDistribution:
    """Model-predicted counts ``N * P(d)`` and their binomial RMS errors."""

    expected: tuple[float, ...]
    errors: tuple[float, ...]
    N: int
    model: DigitLawModel

    @property
    def base(self) -> int:
        return self.model.base


@dataclass(frozen=True)
class GofResult:
    chi2: float
    df: int
    alpha: float
    critical: float
    p_value: float
    verdict: Verdict
    warnings: tuple[str, ...] = field(default=())

    @property
    def conforms(self) -> bool:
        return self.verdict is Verdict.CONFORMS


def _check_alpha(alpha: float) -> float:
    if isinstance(alpha, bool) or not isinstance(alpha, numbers.Real) or not 0.0 < alpha < 1.0:
        raise DomainError(f"significance level must be in (0, 1), got {alpha!r}")
    return float(alpha)


def expected_counts(model: DigitLawModel, N: int) -> ExpectedDistribution:
    """Full-precision expected counts and errors for ``N`` records.

    >>> e = expected_counts(classical(), 449)
    >>> round(e.expected[0], 1), round(e.errors[0], 1)
    (135.2, 9.7)
    """
    if isinstance(N, bool) or not isinstance(N, numbers.Integral) or N < 1:
        raise DomainError(f"need at least one record, got N={N!r}")
    N = int(N)
    probs = probability_vector(model)
    expected = tuple(N * p for p in probs)
    errors = tuple(math.sqrt(N * p * (1.0 - p)) for p in probs)
    return ExpectedDistribution(expected, errors, N, model)


def _check_pair(observed: DigitDistribution, expected: ExpectedDistribution) -> None:
    if observed.base != expected.base:
        raise ContractError(f"base mismatch: observed {observed.base}, expected {expected.base}")
    if observed.N != expected.N:
        raise ContractError(f"record count mismatch: observed N={observed.N}, expected N={expected.N}")
    for d, e in enumerate(expected.expected, start=1):
        if not e > 0.0:
            raise DomainError(f"expected count for digit {d} is zero")


def chi_square(observed: DigitDistribution, expected: ExpectedDistribution) -> float:
    _check_pair(observed, expected)
    return math.fsum((o - e) ** 2 / e for o, e in zip(observed.counts, expected.expected))


def p_value(chi2: float, df: int) -> float:
    """Probability of a statistic at least ``chi2`` under chi-square(``df``)."""
    if isinstance(df, bool) or not isinstance(df, numbers.Integral) or df < 1:
        raise DomainError(f"degrees of freedom must be a positive integer, got {df!r}")
    if math.isnan(chi2) or chi2 < 0.0:
        raise DomainError(f"chi-square statistic must be non-negative, got {chi2}")
    return chi2_sf(chi2, int(df))


def chi_square_critical(df: int, alpha: float = DEFAULT_ALPHA) -> float:
    """Value whose chi-square(``df``) upper tail equals ``alpha``, by bisection.

    >>> round(chi_square_critical(8, 0.05), 3)
    15.507
    """
    if isinstance(df, bool) or not isinstance(df, numbers.Integral) or not 1 <= df <= MAX_DF:
        raise DomainError(f"degrees of freedom must be an integer in [1, {MAX_DF}], got {df!r}")
    alpha = _check_alpha(alpha)
    lo, hi = 0.0, float(df)
    while chi2_sf(hi, df) > alpha:
        lo, hi = hi, 2.0 * hi
    while hi - lo > 1e-12 * hi:
        mid = 0.5 * (lo + hi)
        if chi2_sf(mid, df) > alpha:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def verdict_for(chi2: float, critical: float) -> Verdict:
    # a tie goes to rejection: conformity needs strictly less than critical
    return Verdict.CONFORMS if chi2 < critical else Verdict.REJECTS


def degrees_of_freedom(base: int) -> int:
    df = base - 2
    if df < 1:
        raise DomainError(f"degenerate digit space: base {base} has a single first digit")
    return df


def conformity_test(
    observed: DigitDistribution,
    model: DigitLawModel | None = None,
    alpha: float = DEFAULT_ALPHA,
) -> GofResult:
    """Pearson chi-square test of ``observed`` against ``model`` (Benford by default)."""
    alpha = _check_alpha(alpha)
    if model is None:
        model = classical(observed.base)
    df = degrees_of_freedom(observed.base)
    if observed.N < 1:
        raise DomainError("no records to test")
    expected = expected_counts(model, observed.N)
    chi2 = chi_square(observed, expected)
    critical = chi_square_critical(df, alpha)
    warnings = tuple(
        f"expected count for digit {d} is {e:.2f} < {MIN_EXPECTED:g}; chi-square approximation is unreliable"
        for d, e in enumerate(expected.expected, start=1)
        if e < MIN_EXPECTED
    )
    return GofResult(chi2, df, alpha, critical, p_value(chi2, df), verdict_for(chi2, critical), warnings)


def reported_verdict(chi2: float, base: int = 10, alpha: float = DEFAULT_ALPHA) -> GofResult:
    """Verdict for an already computed statistic (e.g. a published one)."""
    alpha = _check_alpha(alpha)
    df = degrees_of_freedom(base)
    critical = chi_square_critical(df, alpha)
    return GofResult(chi2, df, alpha, critical, p_value(chi2, df), verdict_for(chi2, critical))


def digit_deviations(observed: DigitDistribution, expected: ExpectedDistribution) -> tuple[float, ...]:
    """Per-digit standardized residuals ``(observed - expected) / error``."""
    _check_pair(observed, expected)
    if any(s == 0.0 for s in expected.errors):
        raise DomainError("a digit has probability 1; deviations are undefined")
    return tuple((o - e) / s for o, e, s in zip(observed.counts, expected.expected, expected.errors))
