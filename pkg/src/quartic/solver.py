"""End-to-end solver for Ax^2 - By^4 = C and Ax^4 - By^2 = 4.

Every positive solution corresponds to an odd power n of the minimal solution
of A*z1**2 - B*z2**2 = C.  With eps the square of that minimal element and
t = eps + eps':

    x2y4:  y**2 = b * P_n(t),  x = a * Q_n(t)
    x4y2:  x**2 = a * Q_n(t),  y = b * P_n(t)

and only n = r or n = 3r can occur, r the squarefree part of b (resp. a).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from quartic import pell
from quartic.arith import as_perfect_square, is_squarefree, squarefree_split
from quartic.errors import (
    AEqualsOneRequiresC2,
    EvenR,
    NotAdmissible,
    NotSquarefreeA,
    ParityViolation,
    SquareAB,
    UnsupportedForm,
)
from quartic.lucas import p_value, q_value
from quartic.pell import PellFundamental

__all__ = [
    "CandidateOutcome",
    "Completeness",
    "EquationInstance",
    "Form",
    "SolutionRecord",
    "SolveReport",
    "TwoSolutionCondition",
    "candidate_exponents",
    "extract_solution",
    "solve",
    "theorem_certificate",
    "validate",
]


class Form(str, enum.Enum):
    X2Y4 = "x2y4"
    X4Y2 = "x4y2"


class Verdict(str, enum.Enum):
    SOLUTION = "Solution"
    NOT_SQUARE = "NotSquare"


@dataclass(frozen=True)
class EquationInstance:
    form: Form
    A: int
    B: int
    C: int

    def holds(self, x: int, y: int) -> bool:
        if self.form is Form.X2Y4:
            return self.A * x * x - self.B * y**4 == self.C
        return self.A * x**4 - self.B * y * y == self.C


@dataclass(frozen=True)
class CandidateOutcome:
    n: int
    r: int
    multiplier: int
    p_n: int
    q_n: int
    square_test_value: int
    verdict: Verdict


@dataclass(frozen=True)
class SolutionRecord:
    x: int
    y: int
    n: int | None
    coprime: bool


@dataclass(frozen=True)
class TwoSolutionCondition:
    quantity: int
    is_square: bool


@dataclass(frozen=True)
class Completeness:
    kind: str  # "Certified" or "HeuristicBound"
    n_max: int | None = None

    def __str__(self) -> str:
        return self.kind if self.n_max is None else f"{self.kind}({self.n_max})"


CERTIFIED = Completeness("Certified")


@dataclass(frozen=True)
class SolveReport:
    instance: EquationInstance
    fundamental: PellFundamental | None
    candidates: tuple[CandidateOutcome, ...]
    solutions: tuple[SolutionRecord, ...]
    theorem_bound: int
    two_solution_condition: TwoSolutionCondition | None
    completeness: Completeness
    rule_bounds: dict[str, int] = field(default_factory=dict)
    r: int | None = None
    even_r: bool = False

    def solution_set(self) -> set[tuple[int, int]]:
        return {(s.x, s.y) for s in self.solutions}

    def to_dict(self) -> dict:
        """JSON-ready mapping; every integer is a decimal string."""
        inst = self.instance
        fund = self.fundamental
        cond = self.two_solution_condition
        return {
            "instance": {"form": inst.form.value, "A": str(inst.A), "B": str(inst.B), "C": str(inst.C)},
            "fundamental": None
            if fund is None
            else {"a": str(fund.a), "b": str(fund.b), "trace": str(fund.trace)},
            "r": None if self.r is None else str(self.r),
            "even_r": self.even_r,
            "candidates": [
                {
                    "n": str(c.n),
                    "r": str(c.r),
                    "multiplier": str(c.multiplier),
                    "p_n": str(c.p_n),
                    "q_n": str(c.q_n),
                    "square_test_value": str(c.square_test_value),
                    "verdict": c.verdict.value,
                }
                for c in self.candidates
            ],
            "solutions": [
                {"x": str(s.x), "y": str(s.y), "n": None if s.n is None else str(s.n), "coprime": s.coprime}
                for s in self.solutions
            ],
            "theorem_bound": str(self.theorem_bound),
            "two_solution_condition": None
            if cond is None
            else {"quantity": str(cond.quantity), "is_square": cond.is_square},
            "rule_bounds": {k: str(v) for k, v in self.rule_bounds.items()},
            "completeness": str(self.completeness),
        }


def validate(instance: EquationInstance) -> EquationInstance:
    A, B, C = instance.A, instance.B, instance.C
    if A < 1 or B < 1:
        raise NotAdmissible("A and B must be positive integers")
    if C not in (1, 2, 4):
        raise NotAdmissible(f"C={C} not in (1, 2, 4)")
    if instance.form is Form.X4Y2 and C != 4:
        raise UnsupportedForm(f"form x4y2 is handled for C=4 only, got C={C}")
    if not is_squarefree(A):
        raise NotSquarefreeA(f"A={A} is not squarefree")
    if as_perfect_square(A * B) is not None:
        raise SquareAB(f"AB={A * B} is a perfect square")
    if C % 2 == 0 and (A * B) % 2 == 0:
        raise ParityViolation(f"C={C} is even, so AB must be odd (AB={A * B})")
    if instance.form is Form.X2Y4 and A == 1 and C != 2:
        raise AEqualsOneRequiresC2(f"A=1 needs C=2, got C={C}")
    return instance


def candidate_exponents(fundamental: PellFundamental, form: Form) -> tuple[int, list[int]]:
    coord = fundamental.b if form is Form.X2Y4 else fundamental.a
    r = squarefree_split(coord).r
    if r % 2 == 0:
        raise EvenR(f"squarefree part r={r} of {coord} is even")
    return r, [r, 3 * r]


def extract_solution(
    fundamental: PellFundamental, n: int, form: Form, *, r: int | None = None
) -> tuple[CandidateOutcome, SolutionRecord | None]:
    a, b, t = fundamental.a, fundamental.b, fundamental.trace
    p_n = p_value(t, n)
    q_n = q_value(t, n)
    if form is Form.X2Y4:
        test = b * p_n
        root = as_perfect_square(test)
        x, y = (a * q_n, root) if root is not None else (None, None)
    else:
        test = a * q_n
        root = as_perfect_square(test)
        x, y = (root, b * p_n) if root is not None else (None, None)
    if r is None:
        r = squarefree_split(b if form is Form.X2Y4 else a).r
    multiplier = n // r if n % r == 0 else 0
    verdict = Verdict.SOLUTION if root is not None else Verdict.NOT_SQUARE
    outcome = CandidateOutcome(n, r, multiplier, p_n, q_n, test, verdict)
    if root is None:
        return outcome, None
    instance = EquationInstance(form, fundamental.A, fundamental.B, fundamental.C)
    if x <= 0 or y <= 0 or not instance.holds(x, y):
        raise ArithmeticError(f"candidate n={n} produced ({x}, {y}) failing {instance}")
    return outcome, SolutionRecord(x, y, n, math.gcd(x, y) == 1)


def theorem_certificate(
    instance: EquationInstance, fundamental: PellFundamental
) -> tuple[int, TwoSolutionCondition, dict[str, int]]:
    """Sharpest solution-count bound, the two-solution condition, and the bound from each rule.

    Rule keys: "congruence" (C=1, or C=4 with B = 3 mod 4, or C=2 with
    B = 1 mod 4 allow one solution), "quantity" (one solution unless the
    two-solution quantity is a square) and "coprime" (x2y4 with C=4: at most
    one solution with gcd(x, y) = 1).
    """
    B, C, b = instance.B, instance.C, fundamental.b
    rule_bounds: dict[str, int] = {}
    if instance.form is Form.X2Y4:
        quantity = 4 * B * b * b // C + 3
        is_square = as_perfect_square(quantity) is not None
        one = C == 1 or (C == 4 and B % 4 == 3) or (C == 2 and B % 4 == 1)
        rule_bounds["congruence"] = 1 if one else 2
        rule_bounds["quantity"] = 2 if is_square else 1
        if C == 4:
            rule_bounds["coprime"] = 1
        bound = min(rule_bounds["congruence"], rule_bounds["quantity"])
    else:
        quantity = B * b * b + 1
        is_square = as_perfect_square(quantity) is not None
        rule_bounds["quantity"] = 2 if is_square else 1
        bound = rule_bounds["quantity"]
    return bound, TwoSolutionCondition(quantity, is_square), rule_bounds


def solve(instance: EquationInstance, heuristic_n_max: int = 99) -> SolveReport:
    """Validate, locate the Pell fundamental, test the candidate exponents and certify.

    For x4y2 with b even the trace is even and the lemma behind the {r, 3r}
    restriction no longer applies; every odd multiple of r up to
    ``heuristic_n_max`` is then tested and completeness is reported as
    ``HeuristicBound(heuristic_n_max)``.
    """
    validate(instance)
    fundamental = pell.minimal_solution(instance.A, instance.B, instance.C)
    if fundamental is None:
        return SolveReport(instance, None, (), (), 0, None, CERTIFIED)

    bound, condition, rule_bounds = theorem_certificate(instance, fundamental)
    try:
        r, exponents = candidate_exponents(fundamental, instance.form)
    except EvenR:
        # An even r forces an even trace, so P_n and Q_n are odd and the square
        # test value b*P_n (resp. a*Q_n) has odd 2-adic valuation.
        coord = fundamental.b if instance.form is Form.X2Y4 else fundamental.a
        assert fundamental.trace % 2 == 0
        return SolveReport(
            instance, fundamental, (), (), bound, condition, CERTIFIED, rule_bounds,
            r=squarefree_split(coord).r, even_r=True,
        )

    completeness = CERTIFIED
    if instance.form is Form.X4Y2 and fundamental.b % 2 == 0:
        exponents = list(range(r, heuristic_n_max + 1, 2 * r))
        for n in (r, 3 * r):
            if n not in exponents:
                exponents.append(n)
        completeness = Completeness("HeuristicBound", heuristic_n_max)

    candidates = []
    solutions = []
    for n in exponents:
        outcome, record = extract_solution(fundamental, n, instance.form, r=r)
        candidates.append(outcome)
        if record is not None:
            solutions.append(record)
    solutions.sort(key=lambda s: (s.y, s.x))
    return SolveReport(
        instance, fundamental, tuple(candidates), tuple(solutions), bound, condition,
        completeness, rule_bounds, r=r,
    )
