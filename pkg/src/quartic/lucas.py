"""Lucas sequences of a norm-one unit with integer trace t.

For eps + eps' = t and eps * eps' = 1:

    U_k = (eps**k - eps'**k) / (eps - eps'),   V_k = eps**k + eps'**k

and for odd n the two odd-index sequences used by the quartic solver are

    P_n = U_{(n+1)/2} + U_{(n-1)/2},   Q_n = U_{(n+1)/2} - U_{(n-1)/2}.
"""

from __future__ import annotations

from dataclasses import dataclass

from quartic.errors import EvenIndex

__all__ = ["LucasPair", "compose_trace", "lucas_uv", "lucas_uv_linear", "p_value", "q_value"]


@dataclass(frozen=True)
class LucasPair:
    k: int
    U: int
    V: int


def _check_trace(t: int) -> None:
    if t < 3:
        raise ValueError(f"trace t={t} must be >= 3 for a real unit eps > 1")


def _uv_pair(t: int, k: int) -> tuple[int, int, int, int]:
    """(U_k, V_k, U_{k+1}, V_{k+1}) by binary doubling.

    U_2k = U_k V_k              V_2k = V_k**2 - 2
    U_2k+1 = U_k+1 V_k - 1      V_2k+1 = V_k+1 V_k - t
    """
    u0, v0, u1, v1 = 0, 2, 1, t
    for bit in bin(k)[2:] if k else ():
        u2k, v2k = u0 * v0, v0 * v0 - 2
        u2k1, v2k1 = u1 * v0 - 1, v1 * v0 - t
        if bit == "1":
            u0, v0 = u2k1, v2k1
            u1, v1 = u1 * v1, v1 * v1 - 2
        else:
            u0, v0, u1, v1 = u2k, v2k, u2k1, v2k1
    return u0, v0, u1, v1


def lucas_uv(t: int, k: int) -> LucasPair:
    _check_trace(t)
    if k < 0:
        raise ValueError("index k must be >= 0")
    u, v, _, _ = _uv_pair(t, k)
    return LucasPair(k, u, v)


def lucas_uv_linear(t: int, k: int) -> LucasPair:
    """Reference evaluation by the three-term recurrence X_{k+1} = t X_k - X_{k-1}."""
    _check_trace(t)
    u0, u1 = 0, 1
    v0, v1 = 2, t
    for _ in range(k):
        u0, u1 = u1, t * u1 - u0
        v0, v1 = v1, t * v1 - v0
    return LucasPair(k, u0, v0)


def _halves(t: int, n: int) -> tuple[int, int]:
    _check_trace(t)
    if n < 1 or n % 2 == 0:
        raise EvenIndex(f"n={n} must be odd and positive")
    u_lo, _, u_hi, _ = _uv_pair(t, (n - 1) // 2)
    return u_hi, u_lo


def p_value(t: int, n: int) -> int:
    hi, lo = _halves(t, n)
    return hi + lo


def q_value(t: int, n: int) -> int:
    hi, lo = _halves(t, n)
    return hi - lo


def compose_trace(t: int, s: int) -> int:
    """Trace of eps**s, i.e. V_s(t)."""
    if s < 1:
        raise ValueError("power s must be >= 1")
    return lucas_uv(t, s).V
