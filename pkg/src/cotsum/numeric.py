"""Floating-point oracle for the cotangent sums.

Everything here deliberately avoids the exact case analysis: sums are formed
term by term from trig tables so they can disagree with the rational path if
either is wrong. Two things keep the rounding error controlled:

  * integer angle reduction: the angle 2*pi*m*n*a/b is reduced as the integer
    m*(n*a mod b) mod b before any float is formed, so precision does not
    degrade as n*a grows;
  * compensated (Kahan) summation for every sum.

Per-modulus tables of cot(pi*m/b), sin(2*pi*j/b), its cube and cos(2*pi*j/b)
are memoized, which keeps repeated sweeps over the same b close to table
lookup speed.

The comparison tolerance is tol(b) = 1e-9 * b**2: the largest table entry is
cot(pi/b) ~ b/pi and sums have b-1 terms, so admissible rounding noise grows
about quadratically in b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import PreconditionError
from .exact import check_modulus, check_positive

__all__ = [
    "NumericResult",
    "tol",
    "agrees",
    "eval_float",
    "cot_sin2_sum",
    "cot_cos_power_sum",
    "frac_part_via_sine_sum",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class NumericResult:
    """A compensated float sum plus the bookkeeping needed to trust it."""

    value: float
    term_count: int
    abs_bound: float  # a priori bound on every partial sum and on value

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise ValueError(f"non-finite sum {self.value!r}")
        if self.term_count < 1:
            raise ValueError(f"term_count must be >= 1, got {self.term_count}")
        if self.abs_bound < 0.0:
            raise ValueError(f"abs_bound must be >= 0, got {self.abs_bound}")


def tol(b: int) -> float:
    """Comparison tolerance for modulus b."""
    check_modulus(b)
    return 1e-9 * b * b


def agrees(exact: Fraction, result: NumericResult, b: int) -> bool:
    """Whether a float evaluation matches an exact value within tol(b)."""
    return abs(float(exact) - result.value) <= tol(b)


@lru_cache(maxsize=64)
def _tables(b: int) -> tuple[list[float], list[float], list[float], list[float]]:
    check_modulus(b)
    sin = [math.sin(_TWO_PI * j / b) for j in range(b)]
    cos = [math.cos(_TWO_PI * j / b) for j in range(b)]
    sin3 = [s * s * s for s in sin]
    cot = [0.0]  # index 0 unused, cot(0) never appears
    for m in range(1, b):
        cot.append(math.cos(math.pi * m / b) / math.sin(math.pi * m / b))
    return cot, sin, cos, sin3


def _term_bound(b: int, cot: list[float]) -> float:
    # |cot(pi*m/b)| peaks at m=1 and the other factor is at most 1,
    # so (b-1)*cot(pi/b) dominates the sum of |terms|, hence every partial sum
    return (b - 1) * abs(cot[1])


def eval_float(n: int, a: int, b: int) -> NumericResult:
    """Brute-force S(n, a, b): sum of cot(pi*m/b) * sin(2*pi*m*n*a/b)**3."""
    check_positive("n", n)
    check_positive("a", a)
    cot, _, _, sin3 = _tables(b)
    r = n * a % b
    s = 0.0
    c = 0.0
    for m in range(1, b):
        t = cot[m] * sin3[m * r % b]
        y = t - c
        hi = s + y
        c = (hi - s) - y
        s = hi
    return NumericResult(value=s, term_count=b - 1, abs_bound=_term_bound(b, cot))


def cot_sin2_sum(n: int, a: int, b: int) -> NumericResult:
    """sum of cot(pi*m/b) * sin(2*pi*m*n*a/b)**2; identically zero.

    The m -> b-m flip negates the cotangent and fixes the squared sine, so
    terms cancel in pairs. Returned unsimplified as a cancellation probe.
    """
    check_positive("n", n)
    check_positive("a", a)
    cot, sin, _, _ = _tables(b)
    r = n * a % b
    s = 0.0
    c = 0.0
    for m in range(1, b):
        v = sin[m * r % b]
        t = cot[m] * v * v
        y = t - c
        hi = s + y
        c = (hi - s) - y
        s = hi
    return NumericResult(value=s, term_count=b - 1, abs_bound=_term_bound(b, cot))


def cot_cos_power_sum(q: int, n: int, a: int, b: int) -> NumericResult:
    """sum of cot(pi*m/b) * cos(2*pi*m*n*a/b)**q; identically zero for q >= 1.

    Same pairing as cot_sin2_sum: cosine is even under m -> b-m, cotangent odd.
    """
    check_positive("q", q)
    check_positive("n", n)
    check_positive("a", a)
    cot, _, cos, _ = _tables(b)
    r = n * a % b
    s = 0.0
    c = 0.0
    for m in range(1, b):
        t = cot[m] * cos[m * r % b] ** q
        y = t - c
        hi = s + y
        c = (hi - s) - y
        s = hi
    return NumericResult(value=s, term_count=b - 1, abs_bound=_term_bound(b, cot))


def frac_part_via_sine_sum(n: int, a: int, b: int) -> NumericResult:
    """{n*a/b} recovered from the plain (first-power) cotangent-sine sum.

    Uses sum_{m=1}^{b-1} cot(pi*m/b) * sin(2*pi*m*j/b) = b - 2*j for
    j = n*a mod b, which needs b to not divide n*a. Compare against
    frac_part(n, a, b) within tol(b).
    """
    check_positive("n", n)
    check_positive("a", a)
    cot, sin, _, _ = _tables(b)
    r = n * a % b
    if r == 0:
        raise PreconditionError(f"{b} divides {n}*{a}; the sine sum degenerates")
    s = 0.0
    c = 0.0
    for m in range(1, b):
        t = cot[m] * sin[m * r % b]
        y = t - c
        hi = s + y
        c = (hi - s) - y
        s = hi
    inner_bound = _term_bound(b, cot)
    value = 0.5 - s / (2.0 * b)
    return NumericResult(
        value=value,
        term_count=b - 1,
        abs_bound=max(inner_bound, 0.5 + inner_bound / (2.0 * b)),
    )
