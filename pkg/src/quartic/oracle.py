"""Independent ground truth for the solver.

Nothing here uses the Pell parametrization: solutions are found by direct
enumeration, Pell answers by exhaustive search, and the two non-square
lemmas are checked value by value.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from quartic.arith import as_perfect_square
from quartic.lucas import p_value, q_value
from quartic.pell import PellUnit, nagell_bounds, pell_unit
from quartic.solver import EquationInstance, Form, SolutionRecord

__all__ = [
    "ScanViolation",
    "brute_force",
    "lemma_scan",
    "nagell_minimal_solution",
    "pell_search",
    "pell_unit_search",
    "q_even_trace_probe",
]


@dataclass(frozen=True)
class ScanViolation:
    t: int
    n: int
    kind: str  # "PSquare" or "QSquare"
    value: int


def brute_force(instance: EquationInstance, bound: int) -> list[SolutionRecord]:
    """All solutions with y <= bound (x2y4) or x <= bound (x4y2), sorted by that variable."""
    A, B, C = instance.A, instance.B, instance.C
    out = []
    if instance.form is Form.X2Y4:
        for y in range(1, bound + 1):
            num = B * y**4 + C
            if num % A:
                continue
            x = as_perfect_square(num // A)
            if x:
                out.append(SolutionRecord(x, y, None, math.gcd(x, y) == 1))
    else:
        for x in range(1, bound + 1):
            num = A * x**4 - C
            if num <= 0 or num % B:
                continue
            y = as_perfect_square(num // B)
            if y:
                out.append(SolutionRecord(x, y, None, math.gcd(x, y) == 1))
    for s in out:
        assert instance.holds(s.x, s.y)
    return out


def pell_search(A: int, B: int, C: int, b_max: int) -> tuple[int, int] | None:
    """Smallest (a, b) with b <= b_max and A*a**2 - B*b**2 == C, by trying every b."""
    for b in range(1, b_max + 1):
        num = B * b * b + C
        if num % A:
            continue
        a = as_perfect_square(num // A)
        if a:
            return a, b
    return None


def nagell_minimal_solution(A: int, B: int, C: int, limit: int = 10**6) -> tuple[int, int] | None:
    """Minimal (a, b) certified by the Nagell class bound on v.

    Every class of u**2 - AB*v**2 = AC has a member with v under the bound,
    and the divisibility A | u is constant on a class, so an exhaustive walk
    over v decides solvability. When AC is a square the class of (sqrt(AC), 0)
    has its least positive v at sqrt(AC) * u1, so the walk extends that far.
    Raises OverflowError when the bound exceeds ``limit``.
    """
    unit = pell_unit(A * B)
    v_max, _ = nagell_bounds(A * B, A * C, unit)
    root = as_perfect_square(A * C)
    if root is not None:
        v_max = max(v_max, root * unit.u1)
    if v_max > limit:
        raise OverflowError(f"Nagell bound {v_max} exceeds limit {limit}")
    return pell_search(A, B, C, v_max)


def pell_unit_search(D: int, u_max: int = 10**6) -> PellUnit | None:
    """Smallest (t1, u1) with t1**2 - D*u1**2 == 1 found by trying u1 = 1, 2, ..."""
    for u in range(1, u_max + 1):
        t = as_perfect_square(D * u * u + 1)
        if t:
            return PellUnit(D, t, u)
    return None


def _scan_trace(args: tuple[int, int, bool]) -> list[ScanViolation]:
    t, n_max, even_probe = args
    hits = []
    for n in range(5, n_max + 1, 2):
        if not even_probe:
            p = p_value(t, n)
            if as_perfect_square(p) is not None:
                hits.append(ScanViolation(t, n, "PSquare", p))
        if (t % 2 == 1) != even_probe:
            q = q_value(t, n)
            if as_perfect_square(q) is not None:
                hits.append(ScanViolation(t, n, "QSquare", q))
    return hits


def _run(traces: range, n_max: int, even_probe: bool, workers: int) -> list[ScanViolation]:
    jobs = [(t, n_max, even_probe) for t in traces]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_scan_trace, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        parts = [_scan_trace(job) for job in jobs]
    hits = [h for part in parts for h in part]
    hits.sort(key=lambda h: (h.t, h.n, h.kind))
    return hits


def lemma_scan(t_min: int, t_max: int, n_max: int, workers: int = 1) -> list[ScanViolation]:
    """Square P_n(t) for any t, or square Q_n(t) for odd t, over 5 <= n <= n_max odd."""
    if t_min < 3 or t_max < t_min:
        raise ValueError("need 3 <= t_min <= t_max")
    return _run(range(t_min, t_max + 1), n_max, False, workers)


def q_even_trace_probe(t_max: int, n_max: int, t_min: int = 4, workers: int = 1) -> list[ScanViolation]:
    """Square Q_n(t) at even traces, where the Q lemma makes no claim."""
    if t_min < 3 or t_max < t_min:
        raise ValueError("need 3 <= t_min <= t_max")
    return _run(range(t_min + (t_min % 2), t_max + 1, 2), n_max, True, workers)
