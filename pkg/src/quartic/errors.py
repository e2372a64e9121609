class NotAdmissible(ValueError):
    """The (A, B, C, form) combination is outside the solver's domain."""


class NotSquarefreeA(NotAdmissible):
    pass


class SquareAB(NotAdmissible):
    pass


class ParityViolation(NotAdmissible):
    pass


class AEqualsOneRequiresC2(NotAdmissible):
    pass


class UnsupportedForm(NotAdmissible):
    pass


class PerfectSquareInput(ValueError):
    pass


class EvenIndex(ValueError):
    pass


class EvenR(ArithmeticError):
    """Squarefree part of the decomposed Pell coordinate is even."""
