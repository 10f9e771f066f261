"""Counting and summing integers coprime to n over rational-endpoint ranges.

phi(n, [lo, hi]) counts the integers k with lo <= k <= hi and gcd(n, k) = 1.
Three independent routes are provided so they can cross-check each other:

  phi_range_direct   literal gcd scan over the integer span
  phi_range_mobius   inclusion-exclusion over squarefree divisors of n,
                     sum of mu(d) * (floor(hi/d) - ceil(lo/d) + 1)
  phi_decomposition  prefix counts: phi(n,[1,hi]) - phi(n,[1,lo]) + [gcd(n,lo)=1]
                     with each prefix via legendre_phi

On top of those: the main-term approximation with its explicit 2 * 2^omega(n)
error bound, a divisor-level partition of a range by gcd, and the paired sum
of coprime residues over a symmetric range.

Two historically tempting but wrong variants are kept, clearly labeled, so
their failure stays pinned down: `phi_range_mobius_half_open` (drops the +1
per divisor term, undercounting by exactly one when n = 1) and
`divisor_partition_by_divisor` (indexes the partition by d instead of n/d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import PreconditionError

__all__ = [
    "ArithmeticProfile",
    "RangeBound",
    "PhiDecomposition",
    "PhiApproximation",
    "arithmetic_profile",
    "euler_phi",
    "spf_sieve",
    "phi_range_direct",
    "phi_range_mobius",
    "phi_range_mobius_half_open",
    "legendre_phi",
    "phi_decomposition",
    "phi_approx",
    "divisor_partition_identity",
    "divisor_partition_by_divisor",
    "coprime_sum",
]

RationalLike = int | str | Fraction


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def _ceil_ratio(num: int, den: int) -> int:
    return -((-num) // den)


def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    # trial division; n stays small here (profiles are built up to ~10^4,
    # occasionally for n in the low millions) so no fancier sieve is needed
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    p = 5
    step = 2  # alternate 5,7,11,13,... skipping multiples of 2 and 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True)
class ArithmeticProfile:
    """Factorization-derived data for one n, validated on construction."""

    n: int
    prime_powers: tuple[tuple[int, int], ...]
    omega: int
    mobius: int
    euler_phi: int
    squarefree_divisors: tuple[tuple[int, int], ...]  # (d, mu(d)) pairs, d ascending

    def __post_init__(self) -> None:
        prod = 1
        phi = self.n
        for p, e in self.prime_powers:
            prod *= p**e
            phi -= phi // p
        if prod != self.n:
            raise ValueError(f"prime powers reconstruct {prod}, not {self.n}")
        if phi != self.euler_phi:
            raise ValueError(f"euler_phi {self.euler_phi} disagrees with the product formula {phi}")
        if self.omega != len(self.prime_powers):
            raise ValueError("omega disagrees with the factor list")
        squarefree = all(e == 1 for _, e in self.prime_powers)
        if self.mobius != ((-1) ** self.omega if squarefree else 0):
            raise ValueError("mobius value inconsistent with factorization")
        if len(self.squarefree_divisors) != 2**self.omega:
            raise ValueError("squarefree divisor count must be 2^omega")
        if sum(mu for _, mu in self.squarefree_divisors) != (1 if self.n == 1 else 0):
            raise ValueError("mu does not sum to the n=1 indicator over divisors")


@lru_cache(maxsize=None)
def arithmetic_profile(n: int) -> ArithmeticProfile:
    _check_n(n)
    pp = _factorize(n)
    phi = n
    for p, _ in pp:
        phi -= phi // p
    divs = [(1, 1)]
    for p, _ in pp:
        divs += [(d * p, -mu) for d, mu in divs]
    divs.sort()
    return ArithmeticProfile(
        n=n,
        prime_powers=pp,
        omega=len(pp),
        mobius=0 if any(e > 1 for _, e in pp) else (-1) ** len(pp),
        euler_phi=phi,
        squarefree_divisors=tuple(divs),
    )


def euler_phi(n: int) -> int:
    """Count of 1 <= k <= n with gcd(n, k) = 1."""
    return arithmetic_profile(n).euler_phi


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in arithmetic_profile(n).prime_powers:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def spf_sieve(limit: int) -> list[int]:
    """Smallest prime factor for every index up to limit (0 and 1 map to themselves).

    Used by verification code as an independent source of omega/mobius data.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    spf = list(range(limit + 1))
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:  # p prime
            for multiple in range(p * p, limit + 1, p):
                if spf[multiple] == multiple:
                    spf[multiple] = p
    return spf


@dataclass(frozen=True)
class RangeBound:
    """Closed rational interval [lo, hi], lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"bounds out of order: {self.lo} > {self.hi}")

    def integer_span(self) -> tuple[int, int]:
        """(ceil(lo), floor(hi)); first > second means no integers inside."""
        lo_n, lo_d = self.lo.numerator, self.lo.denominator
        hi_n, hi_d = self.hi.numerator, self.hi.denominator
        return _ceil_ratio(lo_n, lo_d), hi_n // hi_d

    def width(self) -> Fraction:
        return self.hi - self.lo


def _check_positive_range(bounds: RangeBound) -> None:
    if bounds.lo <= 0:
        raise ValueError(f"range must sit inside the positive reals, got lo = {bounds.lo}")


def phi_range_direct(n: int, bounds: RangeBound) -> int:
    """gcd scan over every integer in the range."""
    _check_n(n)
    _check_positive_range(bounds)
    lo, hi = bounds.integer_span()
    gcd = math.gcd
    return sum(1 for k in range(lo, hi + 1) if gcd(n, k) == 1)


def phi_range_mobius(n: int, bounds: RangeBound) -> int:
    """Inclusion-exclusion count; every arithmetic step is on plain ints.

    Per squarefree divisor d the multiples of d in [lo, hi] number
    floor(hi/d) - ceil(lo/d) + 1 (never negative; an empty fit gives
    ceil > floor and the two cancel the +1).
    """
    _check_n(n)
    _check_positive_range(bounds)
    lo_n, lo_d = bounds.lo.numerator, bounds.lo.denominator
    hi_n, hi_d = bounds.hi.numerator, bounds.hi.denominator
    total = 0
    for d, mu in arithmetic_profile(n).squarefree_divisors:
        total += mu * (hi_n // (hi_d * d) - _ceil_ratio(lo_n, lo_d * d) + 1)
    return total


def phi_range_mobius_half_open(n: int, bounds: RangeBound) -> int:
    """The same inclusion-exclusion with the +1 dropped from each term.

    Kept as a pinned wrong variant: dropping the +1 subtracts
    sum_d mu(d) = [n = 1], so it agrees with phi_range_mobius for n > 1 and
    undercounts by exactly 1 at n = 1 (e.g. n=1, [3, 7] gives 4, not 5).
    """
    _check_n(n)
    _check_positive_range(bounds)
    lo_n, lo_d = bounds.lo.numerator, bounds.lo.denominator
    hi_n, hi_d = bounds.hi.numerator, bounds.hi.denominator
    total = 0
    for d, mu in arithmetic_profile(n).squarefree_divisors:
        total += mu * (hi_n // (hi_d * d) - _ceil_ratio(lo_n, lo_d * d))
    return total


def legendre_phi(n: int, x: RationalLike) -> int:
    """Count of 1 <= k <= x with gcd(n, k) = 1; x may be rational."""
    _check_n(n)
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"prefix bound must be >= 0, got {x}")
    num, den = x.numerator, x.denominator
    total = 0
    for d, mu in arithmetic_profile(n).squarefree_divisors:
        total += mu * (num // (den * d))
    return total


@dataclass(frozen=True)
class PhiDecomposition:
    """phi(n, [lo, hi]) split into prefix counts plus the left-endpoint fix."""

    n: int
    lo: int
    hi: int
    prefix_hi: int  # coprime count on [1, hi]
    prefix_lo: int  # coprime count on [1, lo]
    endpoint: int  # 1 if gcd(n, lo) = 1 else 0 (lo was subtracted twice)

    def __post_init__(self) -> None:
        if self.endpoint not in (0, 1):
            raise ValueError(f"endpoint indicator must be 0 or 1, got {self.endpoint}")

    @property
    def combined(self) -> int:
        return self.prefix_hi - self.prefix_lo + self.endpoint


def phi_decomposition(n: int, lo: int, hi: int) -> PhiDecomposition:
    """Range count through prefix counts: phi[1,hi] - phi[1,lo] + [gcd(n,lo)=1]."""
    _check_n(n)
    _check_int_range(lo, hi)
    return PhiDecomposition(
        n=n,
        lo=lo,
        hi=hi,
        prefix_hi=legendre_phi(n, hi),
        prefix_lo=legendre_phi(n, lo),
        endpoint=1 if math.gcd(n, lo) == 1 else 0,
    )


def _check_int_range(lo: int, hi: int) -> None:
    if not isinstance(lo, int) or not isinstance(hi, int) or lo < 1:
        raise ValueError(f"need integer bounds with 1 <= lo <= hi, got {lo!r}, {hi!r}")
    if lo > hi:
        raise ValueError(f"bounds out of order: {lo} > {hi}")


@dataclass(frozen=True)
class PhiApproximation:
    """Main-term estimate for phi(n, [lo, hi]) with a proven error bound.

    estimate = (hi - lo)/n * phi(n), plus 1 when gcd(n, lo) = 1 so the left
    endpoint is handled exactly. The true count then differs from the estimate
    by a signed accumulation of fractional parts, one pair per squarefree
    divisor, hence |error| <= 2 * 2^omega(n). Construction re-checks the bound.
    """

    n: int
    lo: int
    hi: int
    estimate: Fraction
    exact: int
    error: Fraction
    bound: int

    def __post_init__(self) -> None:
        if self.error != self.exact - self.estimate:
            raise ValueError("error field must equal exact - estimate")
        if abs(self.error) > self.bound:
            raise ValueError(
                f"error {self.error} exceeds bound {self.bound} for n={self.n}, [{self.lo}, {self.hi}]"
            )


def phi_approx(n: int, lo: int, hi: int) -> PhiApproximation:
    _check_n(n)
    if n == 1:
        raise PreconditionError("the error analysis needs n with at least one prime factor")
    _check_int_range(lo, hi)
    profile = arithmetic_profile(n)
    delta = 1 if math.gcd(n, lo) == 1 else 0
    estimate = Fraction((hi - lo) * profile.euler_phi, n) + delta
    exact = phi_range_mobius(n, RangeBound(lo, hi))
    return PhiApproximation(
        n=n,
        lo=lo,
        hi=hi,
        estimate=estimate,
        exact=exact,
        error=exact - estimate,
        bound=2 * 2**profile.omega,
    )


def divisor_partition_identity(n: int, lo: int, hi: int) -> int:
    """sum over d | n of phi(n/d, [lo/d, hi/d]); always equals hi - lo + 1.

    Each integer k in [lo, hi] is counted exactly once, by d = gcd(n, k)
    (k/d is then coprime to n/d). The function recomputes the sum and raises
    ArithmeticError if it ever fails to telescope, so a plain return value
    doubles as a verified identity instance.
    """
    _check_n(n)
    _check_int_range(lo, hi)
    total = 0
    for d in _divisors(n):
        total += phi_range_mobius(n // d, RangeBound(Fraction(lo, d), Fraction(hi, d)))
    if total != hi - lo + 1:
        raise ArithmeticError(
            f"partition of [{lo}, {hi}] by gcd with {n} came to {total}, not {hi - lo + 1}"
        )
    return total


def divisor_partition_by_divisor(n: int, lo: int, hi: int) -> int:
    """The d-indexed (wrong) variant: sum over d | n of phi(d, [lo/d, hi/d]).

    Kept as a pinned misstatement. Counterexample: n=2, lo=1, hi=2 gives
    phi(1,[1,2]) + phi(2,[1/2,1]) = 2 + 1 = 3, but the interval holds 2
    integers. No consistency check on purpose.
    """
    _check_n(n)
    _check_int_range(lo, hi)
    total = 0
    for d in _divisors(n):
        total += phi_range_mobius(d, RangeBound(Fraction(lo, d), Fraction(hi, d)))
    return total


def coprime_sum(n: int, lo: int, hi: int, strict: bool = True) -> int:
    """Sum of the integers in [lo, hi] coprime to n.

    With strict=True (default) the symmetric-range hypothesis lo + hi = n is
    required; under it k <-> n-k pairs the coprime values, forcing the sum to
    n/2 times the coprime count, and the function re-derives that as a self
    check. strict=False just sums (the identity genuinely fails off the
    symmetric case, e.g. n=5, [1, 2] sums to 3 while the paired formula
    would claim 5).
    """
    _check_n(n)
    _check_int_range(lo, hi)
    if strict and lo + hi != n:
        raise PreconditionError(
            f"pairing k <-> n-k needs lo + hi = n; got {lo} + {hi} != {n}"
        )
    gcd = math.gcd
    count = 0
    total = 0
    for k in range(lo, hi + 1):
        if gcd(n, k) == 1:
            count += 1
            total += k
    if strict and 2 * total != n * count:
        raise ArithmeticError(
            f"paired sum broke: 2*{total} != {n}*{count} on [{lo}, {hi}]"
        )
    return total
