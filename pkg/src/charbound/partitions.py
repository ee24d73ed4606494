"""Integer partitions, hook lengths, and exact symmetric/alternating degrees.

A partition is a plain tuple of weakly decreasing positive integers.  Cells of
its diagram are addressed (row, column), zero-based, row 0 on top and longest;
the hook of a cell counts the cell itself plus the cells to its right and the
cells below it.  The hook multiset, and everything computed from it, is
independent of that drawing convention.

Partitions of n are enumerated in reverse-lexicographic order, (n,) first and
(1,)*n last; this is the canonical order used for tie-breaking everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod
from typing import Iterator, NamedTuple

__all__ = [
    "CornerMove",
    "addable",
    "alt_degree",
    "conjugate",
    "degree",
    "enumerate_partitions",
    "hook_multiset",
    "hook_table",
    "is_self_conjugate",
    "removable",
    "validate_partition",
]

Parts = tuple[int, ...]

# factorial(n) // prod(hooks) is used verbatim up to this size; beyond it the
# quotient is accumulated factor-by-factor to keep intermediate values small.
_DIRECT_FACTORIAL_LIMIT = 64


def validate_partition(parts) -> Parts:
    """Return parts as a tuple, checking weak decrease and positivity."""
    t = tuple(parts)
    for i, v in enumerate(t):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"parts must be positive integers, got {v!r} at index {i}")
        if i and t[i - 1] < v:
            raise ValueError(f"parts must be weakly decreasing, got {t}")
    return t


def enumerate_partitions(n: int) -> Iterator[Parts]:
    """All partitions of n exactly once, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        k = parts[i] - 1
        remainder = len(parts) - i  # the borrowed unit plus the dropped 1s
        parts[i] = k
        del parts[i + 1 :]
        while remainder > 0:
            c = min(k, remainder)
            parts.append(c)
            remainder -= c


def conjugate(parts) -> Parts:
    """Column-lengths partition (the diagram reflected about the main diagonal)."""
    parts = validate_partition(parts)
    counts = []
    for c in range(parts[0] if parts else 0):
        counts.append(sum(1 for v in parts if v > c))
    return tuple(counts)


def is_self_conjugate(parts) -> bool:
    parts = validate_partition(parts)
    return parts == conjugate(parts)


def hook_table(parts) -> tuple[tuple[int, ...], ...]:
    """Hook length of every cell, row by row."""
    parts = validate_partition(parts)
    conj = conjugate(parts)
    return tuple(
        tuple(parts[r] - c + conj[c] - r - 1 for c in range(parts[r]))
        for r in range(len(parts))
    )


def hook_multiset(parts) -> tuple[int, ...]:
    """All hook lengths as a sorted tuple (one entry per cell)."""
    return tuple(sorted(h for row in hook_table(parts) for h in row))


def degree(parts) -> int:
    """Symmetric-group irreducible degree of the partition: n! over the hook product.

    The division is exact for every partition; a remainder means the hook
    table is corrupt and raises immediately.
    """
    parts = validate_partition(parts)
    n = sum(parts)
    if n == 0:
        return 1
    conj = conjugate(parts)
    hooks = [
        parts[r] - c + conj[c] - r - 1
        for r in range(len(parts))
        for c in range(parts[r])
    ]
    if n <= _DIRECT_FACTORIAL_LIMIT:
        f, rem = divmod(factorial(n), prod(hooks))
        if rem:
            raise RuntimeError(f"hook product does not divide {n}! for {parts}")
        return f
    acc = Fraction(1)
    for k, h in zip(range(n, 0, -1), sorted(hooks, reverse=True)):
        acc *= Fraction(k, h)
    if acc.denominator != 1:
        raise RuntimeError(f"hook product does not divide {n}! for {parts}")
    return acc.numerator


def alt_degree(parts) -> int:
    """Alternating-group degree: the full degree, halved when self-conjugate.

    The halving rule only applies from n = 2 on, where the alternating group
    has index 2; below that the restriction is the character itself.
    """
    parts = validate_partition(parts)
    f = degree(parts)
    if sum(parts) < 2 or not is_self_conjugate(parts):
        return f
    if f % 2:
        raise RuntimeError(f"self-conjugate partition {parts} has odd degree {f}")
    return f // 2


class CornerMove(NamedTuple):
    """A corner cell together with the partition obtained by adding/removing it."""

    row: int
    col: int
    result: Parts


def addable(parts) -> list[CornerMove]:
    """Corner cells whose addition yields a partition of n+1, in row order."""
    parts = validate_partition(parts)
    k = len(parts)
    moves = []
    for r in range(k + 1):
        cur = parts[r] if r < k else 0
        if r == 0 or parts[r - 1] > cur:
            if r < k:
                result = parts[:r] + (cur + 1,) + parts[r + 1 :]
            else:
                result = parts + (1,)
            moves.append(CornerMove(r, cur, result))
    return moves


def removable(parts) -> list[CornerMove]:
    """Corner cells whose removal yields a partition of n-1, in row order."""
    parts = validate_partition(parts)
    k = len(parts)
    moves = []
    for r in range(k):
        nxt = parts[r + 1] if r + 1 < k else 0
        if parts[r] > nxt:
            new = parts[r] - 1
            if new:
                result = parts[:r] + (new,) + parts[r + 1 :]
            else:
                result = parts[:r]
            moves.append(CornerMove(r, parts[r] - 1, result))
    return moves
