"""Seeded synthetic samples with known first-digit behaviour.

Random source
-------------
A 64-bit xorshift* generator, seeded through one round of splitmix64::

    state = splitmix64(seed)          # replaced by 0x9E3779B97F4A7C15 if 0
    next():
        x ^= x >> 12; x ^= x << 25; x ^= x >> 27    # all mod 2**64
        return x * 0x2545F4914F6CDD1D mod 2**64
    uniform() = (next() >> 11) * 2**-53            # in [0, 1)

Each law consumes uniforms in a fixed order per value:

* ``benford_exact``: ``u, v`` -> ``base**u * base**floor(v * span)``
* ``uniform_digit``: ``u, v, w`` -> ``(d + v) * base**floor(w * span)`` with
  ``d = 1 + floor(u * (base - 1))``
* ``zipf``: ``u`` -> inverse CDF of the density ``x**-beta`` truncated to
  ``[1, base**span)``; ``beta == 1`` is the log-uniform case ``base**(span * u)``
"""

from __future__ import annotations

import enum
import math
import numbers
from dataclasses import dataclass

import numpy as np

from citebenford import _kernels, _pykernels
from citebenford.errors import DomainError
from citebenford.sigdigits import check_base

_ZERO_STATE_REPLACEMENT = 0x9E3779B97F4A7C15


class Law(str, enum.Enum):
    BENFORD_EXACT = "benford_exact"
    ZIPF = "zipf"
    UNIFORM_DIGIT = "uniform_digit"


_LAW_CODES = {
    Law.BENFORD_EXACT: _pykernels.LAW_BENFORD,
    Law.UNIFORM_DIGIT: _pykernels.LAW_UNIFORM_DIGIT,
    Law.ZIPF: _pykernels.LAW_ZIPF,
}


@dataclass(frozen=True)
class GeneratorSpec:
    law: Law
    n: int
    base: int = 10
    span_decades: int = 4
    seed: int = 0
    beta: float | None = None

    def __post_init__(self):
        law = Law(self.law)
        object.__setattr__(self, "law", law)
        object.__setattr__(self, "base", check_base(self.base))
        for name in ("n", "span_decades"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, numbers.Integral) or v < 1:
                raise DomainError(f"{name} must be a positive integer, got {v!r}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, numbers.Integral) or not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if law is Law.ZIPF:
            if self.beta is None or not math.isfinite(self.beta) or self.beta <= 0:
                raise DomainError(f"zipf needs a positive finite beta, got {self.beta!r}")
            object.__setattr__(self, "beta", float(self.beta))
        elif self.beta is not None:
            raise DomainError(f"beta only applies to the zipf law, not {law.value}")
        if self.base ** self.span_decades > 1e300:
            raise DomainError(f"base {self.base} with span {self.span_decades} overflows a double")


class Generator:
    """Stateful sampler; one instance per thread."""

    def __init__(self, seed: int = 0):
        if not 0 <= seed < 2**64:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.state = _pykernels.splitmix64(seed) or _ZERO_STATE_REPLACEMENT

    def next_u64(self) -> int:
        self.state, out = _pykernels.xorshift64star(self.state)
        return out

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * _pykernels.INV_2_53

    def draw(self, law: Law, n: int, base: int = 10, span_decades: int = 4, beta: float | None = None) -> np.ndarray:
        spec = GeneratorSpec(law, n, base, span_decades, 0, beta)
        values, self.state = _kernels.sample(
            _LAW_CODES[spec.law], spec.n, spec.base, spec.span_decades,
            spec.beta if spec.beta is not None else 1.0, self.state,
        )
        return values


def generate(spec: GeneratorSpec) -> np.ndarray:
    """Positive float64 sample described by ``spec``; deterministic in ``spec.seed``."""
    gen = Generator(spec.seed)
    return gen.draw(spec.law, spec.n, spec.base, spec.span_decades, spec.beta)


def parse_law(name: str) -> Law:
    key = name.lower().replace("-", "_")
    aliases = {"benford": Law.BENFORD_EXACT, "uniform": Law.UNIFORM_DIGIT}
    if key in aliases:
        return aliases[key]
    try:
        return Law(key)
    except ValueError:
        raise DomainError(f"unknown law {name!r}; expected benford, uniform or zipf") from None
