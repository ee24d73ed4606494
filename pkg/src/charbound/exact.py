"""Exact integer and rational arithmetic: prime parts and certified root comparisons.

Every inequality verdict in this package reduces to integer comparisons made
here.  No floating point enters any verdict path: comparisons against square
and cube roots are decided by cross-multiplied integer powers, and irrational
quantities are enclosed in rational intervals certified by powering their
endpoints.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

__all__ = [
    "Ordering",
    "RootInterval",
    "UndecidedError",
    "compare_to_root",
    "icbrt",
    "iroot",
    "is_prime",
    "p_part",
    "pi_part",
    "root_bounds",
]

#: Hard cap on interval refinements before a comparison is declared undecided.
REFINEMENT_CAP = 64

Rational = Fraction | int


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class UndecidedError(RuntimeError):
    """A certified-interval comparison hit the refinement cap without a verdict."""


def is_prime(n: int) -> bool:
    """Trial-division primality test (all inputs in this package are tiny)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def p_part(n: int, p: int) -> int:
    """Largest power of the prime p dividing the positive integer n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def pi_part(n: int, primes) -> int:
    """Product of p_part(n, p) over a set of primes."""
    part = 1
    for p in sorted(set(primes)):
        part *= p_part(n, p)
    return part


def icbrt(n: int) -> int:
    """Floor of the cube root of a nonnegative integer, exactly."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 0
    x = 1 << -(-n.bit_length() // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def iroot(n: int, degree: int) -> int:
    """Floor of the degree-th root of a nonnegative integer (degree 2 or 3)."""
    if degree == 2:
        return isqrt(n)
    if degree == 3:
        return icbrt(n)
    raise ValueError(f"degree must be 2 or 3, got {degree}")


def compare_to_root(x: Rational, radicand: Rational, degree: int) -> Ordering:
    """Exact ordering of x versus radicand**(1/degree) for radicand >= 0.

    Decided by comparing x**degree with radicand through integer
    cross-multiplication; a negative x is always below the nonnegative root
    unless both sides are zero.
    """
    if degree not in (2, 3):
        raise ValueError(f"degree must be 2 or 3, got {degree}")
    x = Fraction(x)
    r = Fraction(radicand)
    if r < 0:
        raise ValueError(f"radicand must be nonnegative, got {r}")
    if x < 0:
        return Ordering.LESS
    lhs = x.numerator**degree * r.denominator
    rhs = r.numerator * x.denominator**degree
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL


@dataclass(frozen=True)
class RootInterval:
    """Rational enclosure [low, high] of radicand**(1/degree).

    Certified by low**degree <= radicand <= high**degree with low >= 0.
    """

    low: Fraction
    high: Fraction
    radicand: Fraction
    degree: int

    def __post_init__(self) -> None:
        if not (self.low**self.degree <= self.radicand <= self.high**self.degree):
            raise ValueError("endpoints do not enclose the root")
        if self.low < 0:
            raise ValueError("lower endpoint must be nonnegative")

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    def refined(self, tolerance: Rational) -> "RootInterval":
        """Recompute the enclosure at a smaller tolerance."""
        return root_bounds(self.radicand, self.degree, tolerance)


def root_bounds(radicand: Rational, degree: int, tolerance: Rational) -> RootInterval:
    """Certified enclosure of radicand**(1/degree) with width <= tolerance.

    Exact rational roots collapse to a zero-width interval; otherwise the
    endpoints are consecutive multiples of 1/ceil(1/tolerance), checked by
    powering (integer scaled bisection, no floating point).
    """
    if degree not in (2, 3):
        raise ValueError(f"degree must be 2 or 3, got {degree}")
    r = Fraction(radicand)
    if r < 0:
        raise ValueError(f"radicand must be nonnegative, got {r}")
    t = Fraction(tolerance)
    if t <= 0:
        raise ValueError(f"tolerance must be positive, got {t}")
    num, den = r.numerator, r.denominator
    a, b = iroot(num, degree), iroot(den, degree)
    if a**degree == num and b**degree == den:
        root = Fraction(a, b)
        return RootInterval(root, root, r, degree)
    scale = -(-t.denominator // t.numerator)  # ceil(1/tolerance)
    target = num * scale**degree
    lo = iroot(target // den, degree)
    while (lo + 1) ** degree * den <= target:
        lo += 1
    while lo**degree * den > target:
        lo -= 1
    return RootInterval(Fraction(lo, scale), Fraction(lo + 1, scale), r, degree)
