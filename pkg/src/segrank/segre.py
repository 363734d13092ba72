"""Exact and asymptotic invariants of the variety of rank-one m x n matrices.

Everything here is a pure function of (m, n): dimension and codimension of
the Segre variety, its degree and the degree's parity, the real-solution
count of the conjugate-pair slice construction, the expected number of real
points in a random complementary-dimension linear section, and the growth
constant of that expectation for large n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRange

# Exact binomials are guaranteed overflow-safe (in fixed-width consumers of
# the values) only up to this total.
MAX_DEGREE_INDEX = 64


def _validate(m: int, n: int) -> tuple[int, int]:
    if min(m, n) < 2:
        raise ValueError(f"need m, n >= 2, got ({m}, {n})")
    return m, n


def segre_dim(m: int, n: int) -> int:
    _validate(m, n)
    return m + n - 2


def segre_codim(m: int, n: int) -> int:
    _validate(m, n)
    return (m - 1) * (n - 1)


def segre_degree(m: int, n: int) -> int:
    """Degree of the complex variety of rank-one m x n matrices."""
    _validate(m, n)
    if m + n - 2 > MAX_DEGREE_INDEX:
        raise OutOfRange(f"m + n - 2 = {m + n - 2} exceeds {MAX_DEGREE_INDEX}")
    return math.comb(m + n - 2, m - 1)


def segre_degree_is_odd(m: int, n: int) -> bool:
    """Parity of the degree via the binary-digit (Lucas) criterion.

    comb(a, b) is odd iff every binary digit of b is at most the matching
    digit of a, i.e. b AND NOT a == 0.
    """
    _validate(m, n)
    a, b = m + n - 2, m - 1
    return (b & ~a) == 0


def conjugate_real_count(m: int, n: int) -> int:
    """Real solutions of the slice construction built from conjugate pairs.

    Of the comb(m+n-2, m-1) complex solutions, only those fixed by the
    conjugation swap are real; the count depends on the parities of m and n
    and vanishes iff both are even.
    """
    _validate(m, n)
    if m % 2 == 0 and n % 2 == 0:
        return 0
    if m % 2 == 1 and n % 2 == 0:
        return math.comb((m + n - 3) // 2, (m - 1) // 2)
    if m % 2 == 0 and n % 2 == 1:
        return math.comb((m + n - 3) // 2, (m - 2) // 2)
    return math.comb((m + n - 2) // 2, (m - 1) // 2)


def expected_intersections(m: int, n: int) -> float:
    """Expected number of real points in a random linear section of
    complementary dimension.

    Equals sqrt(pi) * Gamma((m+n-1)/2) / (Gamma(m/2) * Gamma(n/2)),
    evaluated in log space; symmetric in m and n.
    """
    _validate(m, n)
    log_val = (
        0.5 * math.log(math.pi)
        + math.lgamma((m + n - 1) / 2)
        - math.lgamma(m / 2)
        - math.lgamma(n / 2)
    )
    return math.exp(log_val)


def expected_intersections_odd_product(half_m: int, n: int) -> float:
    """Exact rational form of expected_intersections(2*half_m + 1, n).

    The gamma ratio telescopes to prod_{i<half_m} (n/2 + i) / (1/2 + i),
    evaluated here in exact rational arithmetic.
    """
    if half_m < 1:
        raise ValueError("half_m must be >= 1")
    value = Fraction(1)
    for i in range(half_m):
        value *= Fraction(n + 2 * i, 1 + 2 * i)
    return float(value)


def _double_factorial(k: int) -> int:
    # 0!! = 1!! = 1
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def asymptotic_coefficient(m: int) -> float:
    """Constant c with expected_intersections(m, n) ~ c * n^((m-1)/2).

    c = 1/(m-2)!! for odd m and sqrt(pi/2)/(m-2)!! for even m.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    dfac = _double_factorial(m - 2)
    if m % 2 == 1:
        return 1.0 / dfac
    return math.sqrt(math.pi / 2.0) / dfac


@dataclass(frozen=True)
class SegreInvariants:
    """Invariant bundle for one ambient matrix shape."""

    m: int
    n: int
    dim: int
    codim: int
    degree: int
    degree_odd: bool
    conjugate_real: int

    @classmethod
    def compute(cls, m: int, n: int) -> "SegreInvariants":
        return cls(
            m=m,
            n=n,
            dim=segre_dim(m, n),
            codim=segre_codim(m, n),
            degree=segre_degree(m, n),
            degree_odd=segre_degree_is_odd(m, n),
            conjugate_real=conjugate_real_count(m, n),
        )
