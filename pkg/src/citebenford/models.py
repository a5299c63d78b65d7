"""Digit-probability laws: classical Benford, generalized power law, uniform."""

from __future__ import annotations

import enum
import math
import numbers
from dataclasses import dataclass

from citebenford.errors import DomainError
from citebenford.sigdigits import check_base

# Band around beta == 1 evaluated with the classical (logarithmic) branch.
BETA_ONE_BAND = 1e-9


class LawKind(str, enum.Enum):
    CLASSICAL = "classical_benford"
    GENERALIZED = "generalized_benford"
    UNIFORM = "uniform"


@dataclass(frozen=True)
class DigitLawModel:
    kind: LawKind = LawKind.CLASSICAL
    base: int = 10
    beta: float | None = None

    def __post_init__(self):
        kind = LawKind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "base", check_base(self.base))
        if kind is LawKind.GENERALIZED:
            if self.beta is None or isinstance(self.beta, bool) or not isinstance(self.beta, numbers.Real):
                raise DomainError("generalized law needs a numeric beta")
            beta = float(self.beta)
            if not math.isfinite(beta) or beta <= 0.0:
                raise DomainError(f"beta must be positive and finite, got {self.beta}")
            object.__setattr__(self, "beta", beta)
        elif self.beta is not None:
            raise DomainError(f"beta only applies to the generalized law, not {kind.value}")

    @property
    def n_digits(self) -> int:
        return self.base - 1

    def describe(self) -> str:
        if self.kind is LawKind.GENERALIZED:
            return f"generalized Benford (beta={self.beta:g}, base {self.base})"
        if self.kind is LawKind.UNIFORM:
            return f"uniform (base {self.base})"
        return f"Benford (base {self.base})"


def classical(base: int = 10) -> DigitLawModel:
    return DigitLawModel(LawKind.CLASSICAL, base)


def generalized(beta: float, base: int = 10) -> DigitLawModel:
    return DigitLawModel(LawKind.GENERALIZED, base, beta)


def uniform(base: int = 10) -> DigitLawModel:
    return DigitLawModel(LawKind.UNIFORM, base)


def _classical(d: int, base: int) -> float:
    return math.log1p(1.0 / d) / math.log(base)


def _power_law(d: int, base: int, beta: float) -> float:
    # ((d+1)^t - d^t) / (base^t - 1) with t = 1 - beta, written with expm1 so
    # the cancellation near beta = 1 stays benign
    t = 1.0 - beta
    num = math.expm1(t * math.log(d + 1)) - math.expm1(t * math.log(d))
    return num / math.expm1(t * math.log(base))


def probability(model: DigitLawModel, d: int) -> float:
    """Probability that the first significant digit equals ``d``.

    >>> round(probability(classical(), 1), 3)
    0.301
    """
    if isinstance(d, bool) or not isinstance(d, numbers.Integral) or not 1 <= d < model.base:
        raise DomainError(f"digit must be an integer in [1, {model.base - 1}], got {d!r}")
    d = int(d)
    if model.kind is LawKind.UNIFORM:
        return 1.0 / (model.base - 1)
    if model.kind is LawKind.GENERALIZED:
        beta = model.beta
        if beta != 1.0 and abs(beta - 1.0) >= BETA_ONE_BAND:
            return _power_law(d, model.base, beta)
    return _classical(d, model.base)


def probability_vector(model: DigitLawModel) -> tuple[float, ...]:
    return tuple(probability(model, d) for d in range(1, model.base))


def parse_model(name: str, base: int = 10, beta: float | None = None) -> DigitLawModel:
    """Build a model from a CLI-style name: benford, generalized or uniform."""
    key = name.lower().replace("-", "_")
    if key in ("benford", "classical", "classical_benford"):
        return classical(base)
    if key in ("generalized", "generalized_benford"):
        if beta is None:
            raise DomainError("the generalized model needs --beta")
        return generalized(beta, base)
    if key == "uniform":
        return uniform(base)
    raise DomainError(f"unknown model {name!r}; expected benford, generalized or uniform")
