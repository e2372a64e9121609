import pytest

from quartic.arith import as_perfect_square
from quartic.oracle import ScanViolation, brute_force, lemma_scan, pell_unit_search, q_even_trace_probe
from quartic.lucas import q_value
from quartic.solver import EquationInstance, Form


@pytest.mark.parametrize(
    "instance, bound, expected",
    [
        (EquationInstance(Form.X2Y4, 5, 1, 4), 100, [(1, 1), (2, 2)]),
        (EquationInstance(Form.X2Y4, 2, 1, 1), 1000, [(1, 1)]),
        (EquationInstance(Form.X4Y2, 7, 3, 4), 100, [(1, 1), (2, 6)]),
    ],
)
def test_brute_force_examples(instance, bound, expected):
    found = brute_force(instance, bound)
    assert [(s.x, s.y) for s in found] == expected
    assert all(instance.holds(s.x, s.y) for s in found)


def test_lemma_scan_examples():
    assert lemma_scan(3, 50, 99) == []
    assert lemma_scan(3, 3, 5) == []
    assert lemma_scan(4, 4, 99) == []
    assert lemma_scan(3, 10, 3) == []


def test_lemma_scan_rejects_bad_range():
    with pytest.raises(ValueError):
        lemma_scan(2, 10, 9)


def test_even_trace_probe_finds_square():
    hits = q_even_trace_probe(200, 99)
    assert ScanViolation(6, 7, "QSquare", 169) in hits
    for h in hits:
        assert h.t % 2 == 0 and h.n > 3 and h.kind == "QSquare"
        assert q_value(h.t, h.n) == h.value
        assert as_perfect_square(h.value) is not None


def test_partitioned_scan_is_deterministic():
    assert q_even_trace_probe(60, 31, workers=2) == q_even_trace_probe(60, 31, workers=1)
    assert lemma_scan(3, 30, 21, workers=2) == lemma_scan(3, 30, 21)


def test_pell_unit_search_gives_up():
    assert pell_unit_search(61, u_max=1000) is None
