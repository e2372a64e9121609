import pytest

from quartic.errors import (
    AEqualsOneRequiresC2,
    EvenR,
    NotAdmissible,
    NotSquarefreeA,
    ParityViolation,
    SquareAB,
    UnsupportedForm,
)
from quartic.oracle import brute_force
from quartic.pell import PellFundamental, minimal_solution
from quartic.solver import (
    EquationInstance,
    Form,
    Verdict,
    candidate_exponents,
    extract_solution,
    solve,
    theorem_certificate,
    validate,
)

X2, X4 = Form.X2Y4, Form.X4Y2


def inst(form, A, B, C):
    return EquationInstance(form, A, B, C)


def test_validate_accepts():
    i = inst(X2, 2, 1, 1)
    assert validate(i) is i


@pytest.mark.parametrize(
    "instance, exc",
    [
        (inst(X2, 4, 3, 1), NotSquarefreeA),
        (inst(X2, 3, 3, 1), SquareAB),
        (inst(X2, 1, 3, 4), AEqualsOneRequiresC2),
        (inst(X2, 1, 3, 1), AEqualsOneRequiresC2),
        (inst(X2, 2, 3, 2), ParityViolation),
        (inst(X2, 3, 2, 4), ParityViolation),
        (inst(X4, 7, 3, 1), UnsupportedForm),
        (inst(X2, 2, 1, 3), NotAdmissible),
        (inst(X2, 0, 1, 1), NotAdmissible),
    ],
)
def test_validate_rejects(instance, exc):
    with pytest.raises(exc):
        validate(instance)


def test_x4y2_allows_a_equal_one():
    assert validate(inst(X4, 1, 3, 4))


def _fund(b, a=1):
    return PellFundamental(A=1, B=1, C=1, a=a, b=b, trace=3)


@pytest.mark.parametrize("b, r, exps", [(1, 1, [1, 3]), (12, 3, [3, 9]), (75, 3, [3, 9]), (7, 7, [7, 21])])
def test_candidate_exponents(b, r, exps):
    assert candidate_exponents(_fund(b), X2) == (r, exps)


def test_candidate_exponents_even_r():
    with pytest.raises(EvenR):
        candidate_exponents(_fund(50), X2)
    assert candidate_exponents(_fund(50, a=4), X4) == (1, [1, 3])


def test_extract_solution_examples():
    f514 = minimal_solution(5, 1, 4)
    out, rec = extract_solution(f514, 1, X2)
    assert (rec.x, rec.y, rec.n) == (1, 1, 1) and out.verdict is Verdict.SOLUTION
    out, rec = extract_solution(f514, 3, X2)
    assert (rec.x, rec.y) == (2, 2) and (out.p_n, out.q_n, out.multiplier) == (4, 2, 3)

    f211 = minimal_solution(2, 1, 1)
    out, rec = extract_solution(f211, 3, X2)
    assert rec is None and out.verdict is Verdict.NOT_SQUARE and out.square_test_value == 7

    f734 = minimal_solution(7, 3, 4)
    assert (f734.a, f734.b, f734.trace) == (1, 1, 5)
    out, rec = extract_solution(f734, 3, X4)
    assert (rec.x, rec.y) == (2, 6) and out.square_test_value == 4 and not rec.coprime


@pytest.mark.parametrize(
    "instance, quantity, bound",
    [(inst(X2, 2, 1, 1), 7, 1), (inst(X2, 5, 1, 4), 4, 2), (inst(X4, 7, 3, 4), 4, 2), (inst(X4, 5, 1, 4), 2, 1)],
)
def test_theorem_certificate(instance, quantity, bound):
    fund = minimal_solution(instance.A, instance.B, instance.C)
    got_bound, cond, rules = theorem_certificate(instance, fund)
    assert (cond.quantity, got_bound) == (quantity, bound)
    assert cond.is_square == (quantity in (4, 9, 16))
    assert got_bound == min(rules.get("congruence", 2), rules["quantity"])


def test_congruence_rule_for_c1():
    _, _, rules = theorem_certificate(inst(X2, 2, 1, 1), minimal_solution(2, 1, 1))
    assert rules["congruence"] == 1


@pytest.mark.parametrize(
    "instance, solutions, bound",
    [
        (inst(X2, 5, 1, 4), {(1, 1), (2, 2)}, 2),
        (inst(X2, 2, 1, 1), {(1, 1)}, 1),
        (inst(X2, 1, 7, 2), {(3, 1)}, 1),
        (inst(X4, 7, 3, 4), {(1, 1), (2, 6)}, 2),
        (inst(X4, 5, 1, 4), {(1, 1)}, 1),
        (inst(X2, 3, 5, 1), set(), 0),
    ],
)
def test_solve_examples(instance, solutions, bound):
    report = solve(instance)
    assert report.solution_set() == solutions
    assert report.theorem_bound == bound
    assert str(report.completeness) == "Certified"


def test_solve_without_fundamental():
    report = solve(inst(X2, 3, 5, 1))
    assert report.fundamental is None and report.solutions == () and report.two_solution_condition is None


def test_even_r_has_no_solutions():
    # 5a^2 - b^2 = 1 has minimal b = 2, so y^2 = 2 P_n with P_n odd
    report = solve(inst(X2, 5, 1, 1))
    assert report.even_r and report.r == 2 and report.fundamental.trace % 2 == 0
    assert report.solutions == () and brute_force(report.instance, 5000) == []


def test_x4y2_even_b_is_heuristic():
    report = solve(inst(X4, 1, 3, 4), heuristic_n_max=31)
    assert str(report.completeness) == "HeuristicBound(31)"
    assert [c.n for c in report.candidates] == list(range(1, 32, 2))
    assert report.solution_set() == {(2, 2)}


def test_solution_n_in_candidate_set_when_certified():
    for A, B, C in [(5, 1, 4), (2, 1, 1), (13, 1, 4), (29, 5, 4)]:
        report = solve(inst(X2, A, B, C))
        for s in report.solutions:
            assert s.n in (report.r, 3 * report.r)
            assert report.instance.holds(s.x, s.y)


def test_to_dict_uses_strings():
    d = solve(inst(X2, 5, 1, 4)).to_dict()
    assert d["solutions"][1] == {"x": "2", "y": "2", "n": "3", "coprime": False}
    assert d["theorem_bound"] == "2" and d["completeness"] == "Certified"
