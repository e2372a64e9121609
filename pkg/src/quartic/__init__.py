"""Complete solution sets for Ax^2 - By^4 = C (C in 1, 2, 4) and Ax^4 - By^2 = 4."""

from quartic.errors import (
    AEqualsOneRequiresC2,
    EvenIndex,
    EvenR,
    NotAdmissible,
    NotSquarefreeA,
    ParityViolation,
    PerfectSquareInput,
    SquareAB,
    UnsupportedForm,
)
from quartic.pell import PellFundamental, minimal_solution, pell_unit
from quartic.solver import EquationInstance, Form, SolveReport, solve

__all__ = [
    "AEqualsOneRequiresC2",
    "EquationInstance",
    "EvenIndex",
    "EvenR",
    "Form",
    "NotAdmissible",
    "NotSquarefreeA",
    "ParityViolation",
    "PellFundamental",
    "PerfectSquareInput",
    "SolveReport",
    "SquareAB",
    "UnsupportedForm",
    "minimal_solution",
    "pell_unit",
    "solve",
]
