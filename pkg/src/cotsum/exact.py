"""Exact fractional parts and the scaled boundary count.

All arithmetic here is on Python ints and `fractions.Fraction`, so values are
exact at any size. The two primitives everything else reduces to:

  frac_part(n, a, b)          {n*a/b}, an exact rational in [0, 1)
  boundary_count(n, a, b, k)  b times the number of multiples of b in the
                              half-open integer window (n*a, n*a + k]

The shift rule ties them together: {(n*a+k)/b} = {n*a/b} + k/b - E/b where E
is the boundary count. `shifted_frac_part` computes the left side through the
right side; verification code compares it against the direct definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Fraction",
    "BoundaryCount",
    "frac_part",
    "boundary_count",
    "shifted_frac_part",
]


def check_modulus(b: int) -> None:
    if not isinstance(b, int) or b < 2:
        raise ValueError(f"modulus b must be an integer >= 2, got {b!r}")


def check_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class BoundaryCount:
    """b * #(multiples of b in the window (n*a, n*a + k])."""

    n: int
    a: int
    b: int
    k: int
    value: int

    def __post_init__(self) -> None:
        # value is b times a count, so it is a non-negative multiple of b
        if self.value < 0 or self.value % self.b != 0:
            raise ValueError(f"boundary count {self.value} is not a non-negative multiple of {self.b}")
        if self.k == 0 and self.value != 0:
            raise ValueError("empty window must have count 0")
        # a window shorter than b holds at most one multiple of b
        if self.k <= self.b - 1 and self.value not in (0, self.b):
            raise ValueError(f"window of length {self.k} < b cannot hold count {self.value // self.b}")

    @property
    def multiples(self) -> int:
        """The raw count, without the factor of b."""
        return self.value // self.b


def frac_part(n: int, a: int, b: int) -> Fraction:
    """Fractional part {n*a/b} as an exact Fraction in [0, 1)."""
    check_positive("n", n)
    check_positive("a", a)
    check_modulus(b)
    return Fraction(n * a % b, b)


def boundary_count(n: int, a: int, b: int, k: int) -> BoundaryCount:
    """Scaled count of multiples of b in (n*a, n*a + k].

    Closed form: b * (floor((n*a + k)/b) - floor(n*a/b)). Equals the lambda
    scan over the window, and for 0 <= k <= b-1 the count is 0 or 1.
    """
    check_positive("n", n)
    check_positive("a", a)
    check_modulus(b)
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"window length k must be a non-negative integer, got {k!r}")
    na = n * a
    value = b * ((na + k) // b - na // b)
    return BoundaryCount(n=n, a=a, b=b, k=k, value=value)


def shifted_frac_part(n: int, a: int, b: int, k: int) -> Fraction:
    """{(n*a + k)/b} via the shift rule, not via direct reduction.

    Exists so the rule x_{n,k} = x_n + k/b - E(n,k)/b can be checked against
    frac_part(1, n*a + k, b) computed independently.
    """
    x = frac_part(n, a, b)
    e = boundary_count(n, a, b, k)
    return x + Fraction(k - e.value, b)
