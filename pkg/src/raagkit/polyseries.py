"""Exact polynomials, truncated power series and the two rank-inversion
engines (product-form divide-out and binomial extraction).

Integer arithmetic throughout the hot path; rational coefficients only
appear in :class:`RatSeries` (reciprocal, log) and the Moebius cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from raagkit.errors import InvariantViolation

DEFAULT_KMAX = 12


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def moebius(m: int) -> int:
    if m < 1:
        raise ValueError("moebius needs a positive integer")
    result = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, ``coeffs[i]`` is the coefficient of ``t**i``.

    Trailing zeros are trimmed; the zero polynomial has no coefficients.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, *coeffs: int) -> IntPoly:
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self[i] + other[i] for i in range(n)))

    def __sub__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self[i] - other[i] for i in range(n)))

    def __mul__(self, other: IntPoly) -> IntPoly:
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``t**k``."""
        return IntPoly((0,) * k + self.coeffs) if self.coeffs else self

    def substitute(self, sign: int = 1, power: int = 1) -> IntPoly:
        """``p(sign * t**power)``."""
        out = [0] * (power * self.degree + 1) if self.coeffs else []
        for i, a in enumerate(self.coeffs):
            out[i * power] = a * sign**i
        return IntPoly(tuple(out))

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def to_list(self) -> list[int]:
        return list(self.coeffs)


@dataclass(frozen=True)
class RatSeries:
    """Power series truncated at ``t**order`` (inclusive) with rational coefficients."""

    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs[: self.order + 1]]
        c += [Fraction(0)] * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_poly(cls, p: IntPoly | Sequence, order: int) -> RatSeries:
        coeffs = p.coeffs if isinstance(p, IntPoly) else tuple(p)
        return cls(tuple(coeffs), order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_ints(self) -> list[int]:
        if not self.is_integral():
            raise InvariantViolation("series has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(other, -1))

    def __mul__(self, other):
        return mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, RatSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return self.coeffs[: order + 1] == other.coeffs[: order + 1]

    def __hash__(self):
        return hash(self.coeffs)


def add(a: RatSeries, b: RatSeries) -> RatSeries:
    order = min(a.order, b.order)
    return RatSeries(tuple(a[i] + b[i] for i in range(order + 1)), order)


def scale(a: RatSeries, c) -> RatSeries:
    return RatSeries(tuple(c * x for x in a.coeffs), a.order)


def mul(a: RatSeries, b: RatSeries) -> RatSeries:
    order = min(a.order, b.order)
    out = [Fraction(0)] * (order + 1)
    for i in range(order + 1):
        ai = a[i]
        if ai:
            for j in range(order + 1 - i):
                out[i + j] += ai * b[j]
    return RatSeries(tuple(out), order)


def power(a: RatSeries, k: int) -> RatSeries:
    out = RatSeries((Fraction(1),), a.order)
    for _ in range(k):
        out = mul(out, a)
    return out


def _require_unit(s: RatSeries, what: str):
    if s[0] != 1:
        raise ValueError(f"{what} needs constant term 1, got {s[0]}")


def reciprocal(s: RatSeries) -> RatSeries:
    _require_unit(s, "reciprocal")
    out = [Fraction(0)] * (s.order + 1)
    out[0] = Fraction(1)
    for k in range(1, s.order + 1):
        out[k] = -sum(s[i] * out[k - i] for i in range(1, k + 1))
    return RatSeries(tuple(out), s.order)


def log(s: RatSeries) -> RatSeries:
    """``log(s)`` for ``s(0) = 1``, via ``(log s)' = s'/s``."""
    _require_unit(s, "log")
    inv = reciprocal(s)
    deriv = RatSeries(tuple(k * s[k] for k in range(1, s.order + 1)), s.order)
    q = mul(deriv, inv)
    out = [Fraction(0)] + [q[k - 1] / k for k in range(1, s.order + 1)]
    return RatSeries(tuple(out), s.order)


def compose_scaled(p: IntPoly, sign: int, power_: int, order: int) -> RatSeries:
    """``p(sign * t**power_)`` as a series truncated at ``order``."""
    return RatSeries.from_poly(p.substitute(sign, power_), order)


@dataclass(frozen=True)
class RankTable:
    """Nonnegative integer ranks indexed ``start..kmax``."""

    kmax: int
    ranks: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for k, r in self.ranks.items():
            if not isinstance(r, int) or isinstance(r, bool) or r < 0:
                raise InvariantViolation(f"rank at k={k} is {r!r}, not a nonnegative integer")
            if not 1 <= k <= self.kmax:
                raise ValueError(f"rank index {k} outside 1..{self.kmax}")

    def __getitem__(self, k: int) -> int:
        return self.ranks[k]

    def __iter__(self):
        return iter(sorted(self.ranks))

    def values(self) -> list[int]:
        return [self.ranks[k] for k in sorted(self.ranks)]

    def with_rank(self, k: int, r: int) -> RankTable:
        return RankTable(self.kmax, {**self.ranks, k: r})


def _truncate(c: list[int], kmax: int) -> list[int]:
    c = list(c[: kmax + 1])
    return c + [0] * (kmax + 1 - len(c))


def product_form_inversion(p: IntPoly, kmax: int = DEFAULT_KMAX) -> RankTable:
    """Exponents ``r_k`` with ``prod_k (1 - t**k)**r_k == p`` mod ``t**(kmax+1)``.

    Iterative divide-out: the lowest surviving coefficient of the residual
    fixes the next exponent, then the matching factor is divided away.
    Negative exponents mean ``p`` is not of the promised form.
    """
    if p[0] != 1:
        raise ValueError(f"product-form inversion needs p(0) = 1, got {p[0]}")
    if kmax < 1:
        raise ValueError("kmax must be positive")
    resid = _truncate(list(p.coeffs), kmax)
    ranks = {}
    for k in range(1, kmax + 1):
        r = -resid[k]
        if r < 0:
            raise InvariantViolation(f"negative exponent {r} at k={k}")
        ranks[k] = r
        if r == 0:
            continue
        # multiply by (1 - t^k)^(-r) = sum_i C(r+i-1, i) t^(k i)
        factor = [0] * (kmax + 1)
        for i in range(kmax // k + 1):
            factor[k * i] = binomial(r + i - 1, i)
        new = [0] * (kmax + 1)
        for a, ca in enumerate(resid):
            if ca:
                for b in range(0, kmax + 1 - a, k):
                    if factor[b]:
                        new[a + b] += ca * factor[b]
        resid = new
    return RankTable(kmax, ranks)


def product_form_inversion_log(p: IntPoly, kmax: int = DEFAULT_KMAX) -> RankTable:
    """Same exponents via logarithms and Moebius inversion (rational route).

    With ``N_m = m [t^m](-log p)`` one has ``m r_m = sum_{d | m} mu(m/d) N_d``.
    """
    if p[0] != 1:
        raise ValueError(f"product-form inversion needs p(0) = 1, got {p[0]}")
    neg_log = scale(log(RatSeries.from_poly(p, kmax)), -1)
    power_sums = {m: m * neg_log[m] for m in range(1, kmax + 1)}
    ranks = {}
    for m in range(1, kmax + 1):
        r = sum(moebius(m // d) * power_sums[d] for d in divisors(m)) / m
        if r.denominator != 1:
            raise InvariantViolation(f"non-integer exponent {r} at k={m}")
        ranks[m] = int(r)
    return RankTable(kmax, ranks)


def expand_product_form(table: RankTable, kmax: int | None = None, stride: int = 1) -> IntPoly:
    """``prod_k (1 - t**(stride*k))**table[k]`` truncated at ``t**kmax``."""
    kmax = table.kmax * stride if kmax is None else kmax
    acc = [1] + [0] * kmax
    for k, r in table.ranks.items():
        step = stride * k
        if not r or step > kmax:
            continue
        factor = {step * i: (-1) ** i * binomial(r, i) for i in range(min(r, kmax // step) + 1)}
        new = [0] * (kmax + 1)
        for a, ca in enumerate(acc):
            if ca:
                for b, cb in factor.items():
                    if a + b <= kmax:
                        new[a + b] += ca * cb
        acc = new
    return IntPoly(tuple(acc))


def geometric_substitution(q: IntPoly, kmax: int = DEFAULT_KMAX) -> RankTable:
    """Coefficients of ``q(t/(1-t))`` for degrees ``2..kmax``.

    Uses ``(t/(1-t))**j = sum_{k>=j} C(k-1, j-1) t**k``.  Degree 1 is left
    for the caller to fill.
    """
    if q[0] or q[1]:
        raise ValueError("geometric substitution needs vanishing coefficients in degrees 0 and 1")
    ranks = {}
    for k in range(2, kmax + 1):
        ranks[k] = sum(q[j] * binomial(k - 1, j - 1) for j in range(2, min(k, q.degree) + 1))
    return RankTable(kmax, ranks)

