import math
from fractions import Fraction

import pytest


def cf_digits_rational(D, terms, scale=10**80):
    """Leading partial quotients of sqrt(D) from a high-precision rational approximation."""
    x = Fraction(math.isqrt(D * scale * scale), scale)
    out = []
    for _ in range(terms):
        a = math.floor(x)
        out.append(a)
        x = 1 / (x - a)
    return out


def naive_u(t, k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, t * b - a
    return a


def naive_v(t, k):
    a, b = 2, t
    for _ in range(k):
        a, b = b, t * b - a
    return a


@pytest.fixture
def naive():
    return naive_u, naive_v


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    name = request.node.name

    class Recorder:
        detail = ""

    rec = Recorder()
    yield rec
    failed = getattr(request.node, "rep_call", None) is None or request.node.rep_call.failed
    ACCEPTANCE_RESULTS[name] = (not failed, rec.detail)


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(ACCEPTANCE_RESULTS.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
