"""Exact integer primitives: square roots, square detection, squarefree parts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd

__all__ = ["SquarefreeSplit", "as_perfect_square", "gcd", "is_squarefree", "isqrt", "squarefree_split"]


def _residues(m: int) -> frozenset[int]:
    return frozenset(i * i % m for i in range(m))


# 64 * 63 * 65 * 11 residue filters reject ~99.5% of non-squares before isqrt.
_FILTERS = tuple((m, _residues(m)) for m in (64, 63, 65, 11))


def isqrt(n: int) -> int:
    """Largest s with s*s <= n."""
    if n < 0:
        raise ValueError("isqrt of negative number")
    return math.isqrt(n)


def as_perfect_square(n: int) -> int | None:
    """Return s with s*s == n, or None when n is not a perfect square."""
    if n < 0:
        return None
    for m, res in _FILTERS:
        if n % m not in res:
            return None
    s = math.isqrt(n)
    return s if s * s == n else None


@dataclass(frozen=True)
class SquarefreeSplit:
    r: int
    k: int


def squarefree_split(n: int) -> SquarefreeSplit:
    """Write n = r * k**2 with r squarefree.

    Trial division by every d up to the cube root of the remaining cofactor,
    then a square test on what is left: a cofactor with no prime factor below
    its cube root is 1, p, p*q or p**2. Cost is O(n**(1/3)) divisions, which is
    immaterial for the Pell coordinates handled here.
    """
    if n < 1:
        raise ValueError("squarefree_split needs n >= 1")
    r, k = 1, 1
    d = 2
    while d * d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            k *= d ** (e // 2)
            if e & 1:
                r *= d
        d += 1 if d == 2 else 2
    s = as_perfect_square(n)
    if s is not None and n > 1:
        k *= s
    else:
        r *= n
    return SquarefreeSplit(r, k)


def is_squarefree(n: int) -> bool:
    return n >= 1 and squarefree_split(n).k == 1
