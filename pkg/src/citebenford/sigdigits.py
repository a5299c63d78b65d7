"""First-significant-digit extraction and tallying."""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from citebenford import _kernels, _pykernels
from citebenford.errors import ContractError, DomainError

MIN_BASE = 2
MAX_BASE = 36
DIGIT_SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"


def check_base(base: int) -> int:
    if isinstance(base, bool) or not isinstance(base, numbers.Integral):
        raise DomainError(f"base must be an integer, got {base!r}")
    base = int(base)
    if not MIN_BASE <= base <= MAX_BASE:
        raise DomainError(f"base must be in [{MIN_BASE}, {MAX_BASE}], got {base}")
    return base


def digit_symbol(d: int) -> str:
    return DIGIT_SYMBOLS[d]


@dataclass(frozen=True)
class DigitDistribution:
    """Observed first-digit counts for digits ``1 .. base-1``.

    ``counts[d - 1]`` is the number of records with first digit ``d``; every
    digit is present, zeros included.
    """

    base: int
    counts: tuple[int, ...]

    def __post_init__(self):
        base = check_base(self.base)
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != base - 1:
            raise ContractError(f"base {base} needs {base - 1} counts, got {len(counts)}")
        for d, c in enumerate(counts, start=1):
            if c < 0:
                raise DomainError(f"count for digit {d} is negative ({c})")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "counts", counts)

    @property
    def N(self) -> int:
        return sum(self.counts)

    @property
    def digits(self) -> range:
        return range(1, self.base)

    def count(self, d: int) -> int:
        if not 1 <= d < self.base:
            raise DomainError(f"digit {d} outside [1, {self.base - 1}]")
        return self.counts[d - 1]

    def proportions(self) -> tuple[float, ...]:
        n = self.N
        if n == 0:
            raise DomainError("empty distribution has no proportions")
        return tuple(c / n for c in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.digits, self.counts))

    @classmethod
    def from_mapping(cls, counts: Mapping[int, int], base: int = 10) -> "DigitDistribution":
        base = check_base(base)
        extra = set(counts) - set(range(1, base))
        if extra:
            raise DomainError(f"digits {sorted(extra)} outside [1, {base - 1}]")
        return cls(base, tuple(counts.get(d, 0) for d in range(1, base)))

    def __add__(self, other: "DigitDistribution") -> "DigitDistribution":
        if not isinstance(other, DigitDistribution):
            return NotImplemented
        if other.base != self.base:
            raise ContractError(f"cannot add base {self.base} and base {other.base} distributions")
        return DigitDistribution(self.base, tuple(a + b for a, b in zip(self.counts, other.counts)))


def first_digit(x, base: int = 10) -> int:
    """Return the first significant digit of ``x > 0`` in ``base``.

    Integers, :class:`~fractions.Fraction` and :class:`~decimal.Decimal` are
    handled exactly. Floats are normalized numerically; near a digit boundary
    the shortest decimal form of the float decides, so ``999.9999999`` gives 9
    and ``0.06`` gives 6.

    >>> first_digit(118), first_digit(0.0345), first_digit(255, 16)
    (1, 3, 15)
    """
    base = check_base(base)
    if isinstance(x, (bool, str, bytes)):
        raise DomainError(f"expected a number, got {x!r}")
    if isinstance(x, numbers.Integral):
        n = int(x)
        if n <= 0:
            raise DomainError(f"value must be positive, got {n}")
        if base == 10:
            return int(str(n)[0])
        return _pykernels.exact_digit(n, 1, base)
    if isinstance(x, (Fraction, Decimal)):
        if isinstance(x, Decimal) and not x.is_finite():
            raise DomainError(f"value must be finite, got {x}")
        f = Fraction(x)
        if f <= 0:
            raise DomainError(f"value must be positive, got {x}")
        return _pykernels.exact_digit(f.numerator, f.denominator, base)
    try:
        v = float(x)
    except (TypeError, ValueError):
        raise DomainError(f"expected a number, got {x!r}") from None
    if not math.isfinite(v):
        raise DomainError(f"value must be finite, got {x!r}")
    if v <= 0.0:
        raise DomainError(f"value must be positive, got {x!r}")
    return _pykernels.float_digit(v, base)


def _as_kernel_array(values) -> np.ndarray | None:
    """Coerce to a contiguous int64 or float64 array, or None for object data."""
    if isinstance(values, np.ndarray):
        arr = values
    else:
        values = list(values)
        if any(isinstance(v, (Fraction, Decimal, bool)) for v in values):
            return None
        if any(isinstance(v, int) and not -(2**63) <= v < 2**63 for v in values):
            return None
        try:
            arr = np.asarray(values)
        except (TypeError, ValueError):
            return None
    if arr.ndim != 1 and arr.size:
        raise DomainError(f"expected a flat sequence, got shape {arr.shape}")
    if arr.size == 0:
        return np.zeros(0, dtype=np.int64)
    if arr.dtype.kind in "iu":
        if arr.dtype.kind == "u" and arr.max() >= 2**63:
            return None
        return np.ascontiguousarray(arr, dtype=np.int64)
    if arr.dtype.kind == "f":
        return np.ascontiguousarray(arr, dtype=np.float64)
    return None


def tally(values: Iterable, base: int = 10) -> DigitDistribution:
    """Count the first digits of ``values``.

    Raises :class:`DomainError` naming the index of the first non-positive or
    non-finite value.
    """
    base = check_base(base)
    if not isinstance(values, np.ndarray):
        values = list(values)
    arr = _as_kernel_array(values)
    if arr is None:
        counts = [0] * (base - 1)
        for i, v in enumerate(values):
            try:
                d = first_digit(v, base)
            except DomainError as exc:
                raise DomainError(f"value at index {i}: {exc}") from None
            counts[d - 1] += 1
        return DigitDistribution(base, tuple(counts))
    if arr.dtype == np.int64:
        counts, bad = _kernels.tally_int64(arr, base)
    else:
        counts, bad = _kernels.tally_float64(arr, base)
    if bad >= 0:
        raise DomainError(f"value at index {bad} must be positive and finite, got {arr[bad]!r}")
    return DigitDistribution(base, tuple(int(c) for c in counts))


def digits_of(values: Sequence, base: int = 10) -> list[int]:
    return [first_digit(v, base) for v in values]
