"""Minimal positive solutions of A*z1**2 - B*z2**2 = C.

The equation is moved to u**2 - D*v**2 = N with D = A*B, N = A*C and u = A*z1.
Every solution class of that norm equation is located with the continued
fraction of (z + sqrt(D))/m for the admissible residues z (the
Lagrange-Matthews-Mollin procedure), then each class representative is
walked down to its smallest |v| with the fundamental unit of D.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from quartic.arith import as_perfect_square, is_squarefree, isqrt
from quartic.errors import NotAdmissible, ParityViolation, PerfectSquareInput

__all__ = [
    "CfExpansion",
    "PellFundamental",
    "PellUnit",
    "cf_expand_sqrt",
    "check_admissible",
    "minimal_solution",
    "nagell_bounds",
    "norm_form_solutions",
    "pell_unit",
]


@dataclass(frozen=True)
class CfExpansion:
    D: int
    a0: int
    period: tuple[int, ...]


@dataclass(frozen=True)
class PellUnit:
    D: int
    t1: int
    u1: int


@dataclass(frozen=True)
class PellFundamental:
    A: int
    B: int
    C: int
    a: int
    b: int
    trace: int


def _check_nonsquare(D: int) -> None:
    if D < 2 or as_perfect_square(D) is not None:
        raise PerfectSquareInput(f"D={D} must be a non-square integer >= 2")


def cf_expand_sqrt(D: int) -> CfExpansion:
    _check_nonsquare(D)
    a0 = isqrt(D)
    # (P, Q) = (0, 1) reaches the reduced state (a0, D - a0**2) after one step;
    # the period closes when that state recurs.
    P, Q = a0, D - a0 * a0
    start = (P, Q)
    period = []
    while True:
        a = (a0 + P) // Q
        period.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
        if (P, Q) == start:
            break
    return CfExpansion(D, a0, tuple(period))


def pell_unit(D: int) -> PellUnit:
    """Smallest t1, u1 > 0 with t1**2 - D*u1**2 == 1."""
    cf = cf_expand_sqrt(D)
    quotients = list(cf.period)
    if len(quotients) % 2:
        quotients *= 2
    # convergents p/q of [a0; period...] up to the one before the closing 2*a0
    p0, p1 = 1, cf.a0
    q0, q1 = 0, 1
    for a in quotients[:-1]:
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
    assert p1 * p1 - D * q1 * q1 == 1
    return PellUnit(D, p1, q1)


def nagell_bounds(D: int, N: int, unit: PellUnit | None = None) -> tuple[int, int]:
    """Integer ceilings (v_max, u_max) for class representatives of u**2 - D*v**2 = N > 0.

    Each class holds a solution with 0 <= v <= u1*sqrt(N)/sqrt(2*(t1+1)) and
    0 < u <= sqrt((t1+1)*N/2).
    """
    if N <= 0:
        raise ValueError("nagell_bounds handles N > 0 only")
    unit = unit or pell_unit(D)
    t1, u1 = unit.t1, unit.u1
    v_max = isqrt(u1 * u1 * N // (2 * (t1 + 1)))
    u_max = isqrt((t1 + 1) * N // 2)
    return v_max, u_max


def _class_representatives(D: int, m: int) -> Iterator[tuple[int, int]]:
    """One primitive solution of x**2 - D*y**2 = m for each solvable residue class."""
    s = isqrt(D)
    q0 = abs(m)
    for z in range(-((q0 - 1) // 2), q0 // 2 + 1):
        if (z * z - D) % q0:
            continue
        P, Q = z, q0
        g_prev, g = -z, q0
        b_prev, b = 1, 0
        visits: dict[tuple[int, int], int] = {}
        while True:
            state = (P, Q)
            visits[state] = visits.get(state, 0) + 1
            # two full passes through the cycle cover both signs of (-1)**i * Q_i
            if visits[state] > 2:
                break
            if Q > 0:
                a = (P + s) // Q
            else:
                a = -((P + s) // -Q) - 1
            g_prev, g = g, a * g + g_prev
            b_prev, b = b, a * b + b_prev
            P = a * Q - P
            Q = (D - P * P) // Q
            if abs(Q) == 1 and g * g - D * b * b == m:
                yield g, b
                break


def _descend(x: int, y: int, unit: PellUnit) -> tuple[int, int]:
    """Move (x, y) along its class to the member with least |y|."""
    D, t1, u1 = unit.D, unit.t1, unit.u1

    def up(x, y):
        return x * t1 + D * y * u1, x * u1 + y * t1

    def down(x, y):
        return x * t1 - D * y * u1, y * t1 - x * u1

    # |y| along a class orbit is unimodal for N > 0
    for step in (up, down):
        while True:
            nx, ny = step(x, y)
            if abs(ny) >= abs(y):
                break
            x, y = nx, ny
    return abs(x), abs(y)


def norm_form_solutions(D: int, N: int) -> list[tuple[int, int]]:
    """Least-|v| representative (u, v), u, v >= 0, of every class of u**2 - D*v**2 = N.

    Non-primitive classes are included: (f*x, f*y) for every f with f*f | N.
    The list is sorted by v, then u.
    """
    _check_nonsquare(D)
    if N <= 0:
        raise ValueError("norm_form_solutions handles N > 0 only")
    unit = pell_unit(D)
    found = set()
    for f in range(1, isqrt(N) + 1):
        if N % (f * f):
            continue
        for x, y in _class_representatives(D, N // (f * f)):
            found.add(_descend(f * x, f * y, unit))
    return sorted(found, key=lambda uv: (uv[1], uv[0]))


def check_admissible(A: int, B: int, C: int) -> None:
    if A < 1 or B < 1:
        raise NotAdmissible("A and B must be positive")
    if C not in (1, 2, 4):
        raise NotAdmissible(f"C={C} not in (1, 2, 4)")
    if not is_squarefree(A):
        raise NotAdmissible(f"A={A} is not squarefree")
    if as_perfect_square(A * B) is not None:
        raise NotAdmissible(f"AB={A * B} is a square")
    if C % 2 == 0 and (A * B) % 2 == 0:
        raise ParityViolation(f"C={C} is even but AB={A * B} is even")


def minimal_solution(A: int, B: int, C: int) -> PellFundamental | None:
    """Smallest positive (a, b), ordered by b, with A*a**2 - B*b**2 == C.

    Returns None when the equation has no solution in positive integers.
    """
    check_admissible(A, B, C)
    D = A * B
    unit = pell_unit(D)
    best = None
    for u, v in norm_form_solutions(D, A * C):
        if v == 0:
            # the class of (sqrt(N), 0): its least positive v is one unit step away
            u, v = u * unit.t1, u * unit.u1
        if u % A:
            continue
        if best is None or (v, u) < (best[1], best[0]):
            best = (u, v)
    if best is None:
        return None
    a, b = best[0] // A, best[1]
    assert A * a * a - B * b * b == C
    num = 4 * B * b * b + 2 * C
    if num % C:
        raise ArithmeticError(f"C={C} does not divide 4*B*b**2 + 2*C for b={b}")
    return PellFundamental(A, B, C, a, b, num // C)


def convergents(cf: CfExpansion, count: int) -> Iterator[tuple[int, int]]:
    """First `count` convergents p/q of sqrt(D)."""
    p0, p1 = 1, cf.a0
    q0, q1 = 0, 1
    yield p1, q1
    quotients = cf.period
    for i in range(count - 1):
        a = quotients[i % len(quotients)]
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
        yield p1, q1

