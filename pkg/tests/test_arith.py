import pytest
from hypothesis import given, strategies as st

from quartic.arith import as_perfect_square, is_squarefree, isqrt, squarefree_split


@pytest.mark.parametrize("n, s", [(0, 0), (17, 4), (10**100, 10**50), (1, 1), (15, 3), (16, 4)])
def test_isqrt_examples(n, s):
    assert isqrt(n) == s


def test_isqrt_negative():
    with pytest.raises(ValueError):
        isqrt(-1)


@given(st.integers(min_value=0, max_value=10**200))
def test_isqrt_bracket(n):
    s = isqrt(n)
    assert s * s <= n < (s + 1) ** 2


@pytest.mark.parametrize("n, s", [(0, 0), (4, 2), (7, None), (1, 1), (2, None), (10**40, 10**20)])
def test_as_perfect_square_examples(n, s):
    assert as_perfect_square(n) == s


@given(st.integers(min_value=0, max_value=10**60))
def test_square_roundtrip(s):
    assert as_perfect_square(s * s) == s


@given(st.integers(min_value=0, max_value=10**60))
def test_non_square_rejected(n):
    s = isqrt(n)
    if s * s != n:
        assert as_perfect_square(n) is None
    else:
        assert as_perfect_square(n) == s


def test_filters_agree_with_isqrt_exhaustively():
    for n in range(20000):
        s = isqrt(n)
        assert (as_perfect_square(n) is not None) == (s * s == n)


@pytest.mark.parametrize("n, r, k", [(1, 1, 1), (12, 3, 2), (50, 2, 5), (72, 2, 6), (49, 1, 7), (30, 30, 1)])
def test_squarefree_split_examples(n, r, k):
    split = squarefree_split(n)
    assert (split.r, split.k) == (r, k)


def _has_square_factor(r):
    p = 2
    while p * p <= r:
        if r % (p * p) == 0:
            return True
        p += 1
    return False


@given(st.integers(min_value=1, max_value=10**9))
def test_squarefree_split_roundtrip(n):
    split = squarefree_split(n)
    assert split.r * split.k**2 == n
    assert not _has_square_factor(split.r)


def test_squarefree_split_large_prime_square():
    p = 1000003
    assert squarefree_split(7 * p * p).r == 7
    assert squarefree_split(p * 1000033).r == p * 1000033


def test_squarefree_split_rejects_zero():
    with pytest.raises(ValueError):
        squarefree_split(0)


def test_is_squarefree():
    assert [n for n in range(1, 20) if not is_squarefree(n)] == [4, 8, 9, 12, 16, 18]
