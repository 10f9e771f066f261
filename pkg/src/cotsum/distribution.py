"""How S(1, a, b) distributes over the coprime residues a of a fixed b.

For b != 3 every coprime a gives 0, +b/2 or -b/2, and each outcome occupies a
contiguous run of the a-line:

    +b/2  for a in [1, floor((b-1)/3)]
    0     for a in [ceil((b+1)/3), floor((2b-1)/3)]
    -b/2  for a in [ceil((2b+1)/3), b-1]

(the gaps at a = b/3 and a = 2b/3 are never coprime to b). A sweep tallies
observed tags against the phi-counts of those three intervals and reports
whether they match.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import CotTag, classify
from .errors import PreconditionError
from .exact import check_modulus
from .totient import RangeBound, euler_phi, phi_range_direct

__all__ = ["SweepReport", "closed_form_counts", "sweep", "sweep_range"]


@dataclass(frozen=True)
class SweepReport:
    b: int
    phi_b: int
    count_zero: int
    count_plus: int
    count_minus: int
    closed_zero: int
    closed_plus: int
    closed_minus: int
    consistent: bool

    def __post_init__(self) -> None:
        matches = (
            self.count_zero == self.closed_zero
            and self.count_plus == self.closed_plus
            and self.count_minus == self.closed_minus
        )
        if self.consistent != matches:
            raise ValueError(f"consistent flag wrong for b={self.b}")


def _interval_phi(b: int, lo: int, hi: int) -> int:
    if lo > hi:
        return 0
    return phi_range_direct(b, RangeBound(lo, hi))


def closed_form_counts(b: int) -> tuple[int, int, int]:
    """(zero, plus, minus) counts predicted by the interval picture."""
    check_modulus(b)
    if b == 3:
        raise PreconditionError("the interval picture excludes b = 3")
    zero = _interval_phi(b, (b + 3) // 3, (2 * b - 1) // 3)  # ceil((b+1)/3) = (b+3)//3
    plus = _interval_phi(b, 1, (b - 1) // 3)
    minus = _interval_phi(b, (2 * b + 3) // 3, b - 1)  # ceil((2b+1)/3) = (2b+3)//3
    return zero, plus, minus


def sweep(b: int) -> SweepReport:
    """Classify every coprime a in [1, b-1] and compare with the closed forms."""
    check_modulus(b)
    if b == 3:
        raise PreconditionError("b = 3 has no three-way split to sweep")
    counts = {CotTag.ZERO: 0, CotTag.PLUS_HALF_B: 0, CotTag.MINUS_HALF_B: 0, CotTag.OTHER: 0}
    for a in range(1, b):
        if gcd(a, b) == 1:
            counts[classify(a, b).tag] += 1
    zero, plus, minus = closed_form_counts(b)
    observed = (counts[CotTag.ZERO], counts[CotTag.PLUS_HALF_B], counts[CotTag.MINUS_HALF_B])
    # a stray OTHER tag cannot hide: the closed forms partition phi(b), so any
    # OTHER leaves the observed triple short of them
    consistent = observed == (zero, plus, minus)
    return SweepReport(
        b=b,
        phi_b=euler_phi(b),
        count_zero=observed[0],
        count_plus=observed[1],
        count_minus=observed[2],
        closed_zero=zero,
        closed_plus=plus,
        closed_minus=minus,
        consistent=consistent,
    )


def sweep_range(b_lo: int, b_hi: int, workers: int = 1) -> list[SweepReport]:
    """Sweep every b in [b_lo, b_hi] except 3, in order."""
    check_modulus(b_lo)
    if b_hi < b_lo:
        raise ValueError(f"empty sweep range: {b_lo}..{b_hi}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    moduli = [b for b in range(b_lo, b_hi + 1) if b != 3]
    if workers == 1 or len(moduli) < 4:
        return [sweep(b) for b in moduli]
    from concurrent.futures import ProcessPoolExecutor

    chunk = max(1, len(moduli) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(sweep, moduli, chunksize=chunk))
