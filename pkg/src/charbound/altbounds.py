"""Largest degrees over partitions of n and the alternating-group cube bound.

Provides the maxima b_sym / b_alt / d_alt with witness partitions, the exact
check d_alt(n)**3 >= n!/2 over a range of n, the three sufficient
induction-step inequalities (decided by exact cube comparisons and, for the
mixed-irrational case, by certified interval refinement), and the
rectangular-shape scan.

All scans run in exact integer arithmetic; maxima are deterministic with ties
broken by the canonical reverse-lexicographic partition order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt, prod

from .exact import (
    REFINEMENT_CAP,
    Ordering,
    UndecidedError,
    compare_to_root,
    root_bounds,
)
from .partitions import Parts, conjugate, enumerate_partitions, validate_partition

__all__ = [
    "AltBoundReport",
    "InductionStepReport",
    "RectangleScanReport",
    "b_alt",
    "b_sym",
    "ceil_sqrt",
    "d_alt",
    "rectangle_scan",
    "verify_cube_bound",
    "verify_induction_step",
]


@dataclass(frozen=True)
class AltBoundReport:
    """Degree maxima for one n together with the exact cube-bound verdict."""

    n: int
    b_sym: int
    b_sym_witness: Parts
    b_alt: int
    b_alt_witness: Parts
    d_alt: int
    d_alt_witness: Parts
    cube_check: bool  # d_alt**3 >= n!/2, decided exactly
    # n = 6 has extra outer automorphisms not visible to partition
    # combinatorics; its report only covers characters extending to Sym(6).
    aut_complete: bool


@dataclass(frozen=True)
class InductionStepReport:
    """Exact verdicts for the three sufficient induction inequalities at n."""

    n: int
    case1_ok: bool
    case2a_ok: bool
    case2b_ok: bool
    case1_lhs: Fraction
    case2a_lhs: Fraction
    # Certified rational bounds at the moment case (2b) became decidable:
    # a lower bound for its left side and an upper bound for (n+1)**(1/3).
    case2b_lhs_low: Fraction
    case2b_rhs_high: Fraction


@dataclass(frozen=True)
class RectangleScanReport:
    """Best rectangular shape b^a with ab = n and its power-threshold verdict."""

    n: int
    delta: Fraction
    best_shape: Parts
    best_degree: int
    exceeds: bool  # best_degree > (n!)**(1/2 - delta), decided exactly


@lru_cache(maxsize=256)
def _degree_maxima(n: int) -> tuple[int, Parts, int, Parts, int, Parts]:
    """Single pass over all partitions of n.

    Returns (b_sym, witness, b_alt, witness, d_alt, witness) where d_alt is
    the maximum over non-self-conjugate partitions only; d_alt is 0 with an
    empty witness when no such partition exists (n <= 1).
    """
    nfact = factorial(n)
    best_sym = best_alt = best_ext = 0
    w_sym = w_alt = w_ext = ()
    for parts in enumerate_partitions(n):
        conj = conjugate(parts)
        hooks = [
            parts[r] - c + conj[c] - r - 1
            for r in range(len(parts))
            for c in range(parts[r])
        ]
        f = nfact // prod(hooks) if hooks else 1
        if f > best_sym:
            best_sym, w_sym = f, parts
        selfconj = parts == conj
        f_alt = f // 2 if selfconj and n >= 2 else f
        if f_alt > best_alt:
            best_alt, w_alt = f_alt, parts
        if not selfconj and f > best_ext:
            best_ext, w_ext = f, parts
    return best_sym, w_sym, best_alt, w_alt, best_ext, w_ext


def b_sym(n: int) -> tuple[int, Parts]:
    """Largest symmetric-group degree at n, with its witness partition."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    stats = _degree_maxima(n)
    return stats[0], stats[1]


def b_alt(n: int) -> tuple[int, Parts]:
    """Largest alternating-group degree at n, with its witness partition."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    stats = _degree_maxima(n)
    return stats[2], stats[3]


def d_alt(n: int) -> tuple[int, Parts]:
    """Largest degree over non-self-conjugate partitions of n.

    These are exactly the alternating-group degrees whose characters extend
    to the symmetric group; requires n >= 5.
    """
    if n < 5:
        raise ValueError(f"n must be at least 5, got {n}")
    stats = _degree_maxima(n)
    return stats[4], stats[5]


def verify_cube_bound(n: int) -> AltBoundReport:
    """Exact check of d_alt(n)**3 >= n!/2 with full degree statistics."""
    if n < 5:
        raise ValueError(f"n must be at least 5, got {n}")
    bs, ws, ba, wa, da, wd = _degree_maxima(n)
    return AltBoundReport(
        n=n,
        b_sym=bs,
        b_sym_witness=ws,
        b_alt=ba,
        b_alt_witness=wa,
        d_alt=da,
        d_alt_witness=wd,
        cube_check=da**3 >= factorial(n) // 2,
        aut_complete=(n != 6),
    )


def ceil_sqrt(m: int) -> int:
    """Smallest integer not below the square root of m, exactly."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    r = isqrt(m)
    return r if r * r == m else r + 1


def verify_induction_step(n: int) -> InductionStepReport:
    """Exact verdicts of the three sufficient inequalities at n >= 30.

    With c = ceil(sqrt(2n)), c' = ceil(sqrt(2n+2)) and t = (n+1)**(1/3):

      (1)   (n+1)/c                          >= t
      (2a)  (n+2-c') / (c-1)                 >= t
      (2b)  (n+3-c'-(c-1)*n**(-1/3)) / (c-1) >= t

    Cases (1) and (2a) are rational-versus-cube-root comparisons and are
    decided by integer cross-multiplication.  Case (2b) mixes two irrational
    roots and is decided by certified interval enclosures, halving the
    tolerance until the comparison separates; hitting the refinement cap
    raises UndecidedError rather than guessing.
    """
    if n < 30:
        raise ValueError(f"n must be at least 30, got {n}")
    c = ceil_sqrt(2 * n)
    c_up = ceil_sqrt(2 * n + 2)
    radicand = Fraction(n + 1)

    lhs1 = Fraction(n + 1, c)
    case1 = compare_to_root(lhs1, radicand, 3) is not Ordering.LESS

    lhs2a = Fraction(n + 2 - c_up, c - 1)
    case2a = compare_to_root(lhs2a, radicand, 3) is not Ordering.LESS

    numer = Fraction(n + 3 - c_up)
    denom = c - 1
    tolerance = Fraction(1, 1024)
    for _ in range(REFINEMENT_CAP):
        nroot = root_bounds(Fraction(n), 3, tolerance)
        target = root_bounds(radicand, 3, tolerance)
        # n**(-1/3) lies in [1/nroot.high, 1/nroot.low]
        lhs_low = (numer - denom / nroot.low) / denom
        lhs_high = (numer - denom / nroot.high) / denom
        if lhs_low >= target.high:
            return InductionStepReport(
                n, case1, case2a, True, lhs1, lhs2a, lhs_low, target.high
            )
        if lhs_high < target.low:
            return InductionStepReport(
                n, case1, case2a, False, lhs1, lhs2a, lhs_low, target.high
            )
        tolerance /= 2
    raise UndecidedError(f"induction case (2b) undecided at n={n} after refinement cap")


def rectangle_scan(n: int, delta: Fraction | int) -> RectangleScanReport:
    """Best degree among rectangular partitions b^a with ab = n.

    The verdict compares that degree against (n!)**(1/2 - delta) exactly: for
    1/2 - delta = p/q the check is degree**q > (n!)**p.
    """
    if n < 4:
        raise ValueError(f"n must be at least 4, got {n}")
    delta = Fraction(delta)
    if not 0 < delta < Fraction(1, 2):
        raise ValueError(f"delta must lie strictly between 0 and 1/2, got {delta}")
    from .partitions import degree as partition_degree

    best_f = 0
    best_shape: Parts = ()
    for rows in range(1, n + 1):
        if n % rows:
            continue
        shape = validate_partition((n // rows,) * rows)
        f = partition_degree(shape)
        if f > best_f:
            best_f, best_shape = f, shape
    exponent = Fraction(1, 2) - delta
    exceeds = best_f**exponent.denominator > factorial(n) ** exponent.numerator
    return RectangleScanReport(n, delta, best_shape, best_f, exceeds)
