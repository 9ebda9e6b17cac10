"""Closed forms for the standard graph families.

These are kept deliberately independent of the general pipeline: the
series forms are expanded with :mod:`raagkit.polyseries` reciprocals and
powers rather than binomial extraction, so tests can pit one against the
other.
"""

from __future__ import annotations

from fractions import Fraction

from raagkit.polyseries import RatSeries, binomial, divisors, moebius, power, reciprocal

_MIN_N = {"circuit": 4, "ycycle": 5}


def _need(n: int, lo: int, name: str):
    if n < lo:
        raise ValueError(f"{name} closed form needs n >= {lo}, got {n}")


def tree_cut_numbers(n: int, j: int) -> int:
    """Cut number ``c_j`` of any tree on ``n`` vertices."""
    _need(n, 1, "tree")
    return (j - 1) * binomial(n - 1, j)


def _geom(order: int) -> RatSeries:
    """``t / (1 - t)``."""
    return RatSeries((0, 1), order) * reciprocal(RatSeries((1, -1), order))


def _from(series: RatSeries, kmax: int) -> dict[int, int]:
    return {k: int(series[k]) for k in range(2, kmax + 1)}


def tree_chen_series(n: int, kmax: int) -> dict[int, int]:
    """``theta_k`` (k >= 2) for a tree: ``1 - (1 - (n-1)t) / (1-t)^(n-1)``."""
    _need(n, 2, "tree")
    one_minus_t = RatSeries((1, -1), kmax)
    denom = power(one_minus_t, n - 1)
    s = RatSeries((1,), kmax) - RatSeries((1, -(n - 1)), kmax) * reciprocal(denom)
    return _from(s, kmax)


def _circuit_series(n: int, kmax: int) -> RatSeries:
    x = _geom(kmax)
    acc = RatSeries((), kmax)
    for j in range(2, n - 1):
        coef = (j - 1) * binomial(n - 1, j) - binomial(n - 2, j - 2)
        acc = acc + RatSeries((coef,), kmax) * power(x, j)
    return acc


def circuit_chen_series(n: int, kmax: int) -> dict[int, int]:
    _need(n, _MIN_N["circuit"], "circuit")
    return _from(_circuit_series(n, kmax), kmax)


def ycycle_chen_series(n: int, kmax: int) -> dict[int, int]:
    """Circuit series plus ``(t/(1-t))^(n-1)``: an (n-1)-circuit with a pendant."""
    _need(n, _MIN_N["ycycle"], "ycycle")
    return _from(_circuit_series(n, kmax) + power(_geom(kmax), n - 1), kmax)


def free_lcs(n: int, kmax: int) -> dict[int, int]:
    """Witt's necklace count ``(1/k) sum_{d|k} mu(d) n^(k/d)``."""
    out = {}
    for k in range(1, kmax + 1):
        r = Fraction(sum(moebius(d) * n ** (k // d) for d in divisors(k)), k)
        assert r.denominator == 1
        out[k] = int(r)
    return out


def free_chen(n: int, kmax: int) -> dict[int, int]:
    """Chen ranks of the free group: ``(k-1) C(n+k-2, k)`` for ``k >= 2``."""
    return {k: (k - 1) * binomial(n + k - 2, k) for k in range(2, kmax + 1)}
