"""Pure-Python hot kernels.

These are the reference versions of the routines in ``_ckernels.pyx``; both
must return identical results (bit-identical for the samplers). The compiled
module imports :func:`exact_float_digit` from here for values that fall in
the rounding guard band.
"""

from __future__ import annotations

import math
from decimal import Decimal
from fractions import Fraction

import numpy as np

MASK64 = 0xFFFFFFFFFFFFFFFF
XORSHIFT_MULT = 0x2545F4914F6CDD1D
INV_2_53 = 1.0 / 9007199254740992.0

# Relative width of the band around a digit boundary inside which the float
# estimate is not trusted and the exact rational path decides.
GUARD = 1e-9

LAW_BENFORD = 0
LAW_UNIFORM_DIGIT = 1
LAW_ZIPF = 2


def exact_digit(num: int, den: int, base: int) -> int:
    """First significant digit of the positive rational ``num/den``."""
    # estimate the exponent from bit lengths, then correct exactly
    k = int(math.floor((num.bit_length() - den.bit_length()) * math.log(2) / math.log(base)))
    while True:
        if k >= 0:
            d = num // (den * base**k)
        else:
            d = (num * base ** (-k)) // den
        if d < 1:
            k -= 1
        elif d >= base:
            k += 1
        else:
            return d


def exact_float_digit(x: float, base: int) -> int:
    # decide on the shortest decimal that round-trips to x (what was written),
    # so 0.06 gives 6 although the stored double is 0.0599999...
    f = Fraction(Decimal(repr(x)))
    return exact_digit(f.numerator, f.denominator, base)


def int_digit(n: int, base: int) -> int:
    while n >= base:
        n //= base
    return n


def float_digit(x: float, base: int) -> int:
    """Normalize ``x`` into [1, base) with one corrective step.

    Values whose normalized mantissa lands within ``GUARD`` of an integer are
    re-decided exactly.
    """
    k = math.floor(math.log(x) / math.log(base))
    try:
        y = x * math.pow(base, -k)
    except OverflowError:
        return exact_float_digit(x, base)
    if y < 1.0:
        y *= base
    elif y >= base:
        y /= base
    if not (1.0 <= y < base):
        return exact_float_digit(x, base)
    d = int(y)
    frac = y - d
    if frac < GUARD * y or (1.0 - frac) < GUARD * y:
        return exact_float_digit(x, base)
    return d


def tally_int64(values: np.ndarray, base: int) -> tuple[np.ndarray, int]:
    """Count first digits of positive integers.

    Returns ``(counts, bad)`` where ``bad`` is the index of the first
    non-positive value, or -1.
    """
    counts = np.zeros(base - 1, dtype=np.int64)
    for i, v in enumerate(values.tolist()):
        if v <= 0:
            return counts, i
        counts[int_digit(v, base) - 1] += 1
    return counts, -1


def tally_float64(values: np.ndarray, base: int) -> tuple[np.ndarray, int]:
    """Count first digits of positive finite reals. Same return as :func:`tally_int64`."""
    counts = np.zeros(base - 1, dtype=np.int64)
    for i, x in enumerate(values.tolist()):
        if not (x > 0.0) or not math.isfinite(x):
            return counts, i
        if x == math.floor(x) and x < 9.0e18:
            d = int_digit(int(x), base)
        else:
            d = float_digit(x, base)
        counts[d - 1] += 1
    return counts, -1


def splitmix64(seed: int) -> int:
    z = (seed + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def xorshift64star(state: int) -> tuple[int, int]:
    """One step: returns ``(new_state, output)``."""
    x = state
    x ^= x >> 12
    x ^= (x << 25) & MASK64
    x ^= x >> 27
    return x, (x * XORSHIFT_MULT) & MASK64


def sample(law: int, n: int, base: int, span: int, beta: float, state: int) -> tuple[np.ndarray, int]:
    """Draw ``n`` values; returns ``(values, new_state)``.

    Draw order per value: benford uses (mantissa, decade), uniform-digit uses
    (digit, fraction, decade), zipf uses one uniform.
    """
    out = [0.0] * n
    fbase = float(base)
    for i in range(n):
        state, r = xorshift64star(state)
        u = (r >> 11) * INV_2_53
        if law == LAW_BENFORD:
            state, r = xorshift64star(state)
            v = (r >> 11) * INV_2_53
            j = min(int(v * span), span - 1)
            out[i] = math.pow(fbase, u) * math.pow(fbase, float(j))
        elif law == LAW_UNIFORM_DIGIT:
            state, r = xorshift64star(state)
            v = (r >> 11) * INV_2_53
            state, r = xorshift64star(state)
            w = (r >> 11) * INV_2_53
            d = 1 + min(int(u * (base - 1)), base - 2)
            j = min(int(w * span), span - 1)
            m = d + v
            if m >= d + 1:
                m = math.nextafter(float(d + 1), 0.0)
            out[i] = m * math.pow(fbase, float(j))
        else:
            if abs(beta - 1.0) < GUARD:
                out[i] = math.pow(fbase, span * u)
            else:
                t = 1.0 - beta
                top = math.pow(fbase, span * t)
                out[i] = math.pow(1.0 + u * (top - 1.0), 1.0 / t)
    return np.array(out, dtype=np.float64), state
