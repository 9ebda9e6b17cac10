"""Rational homotopy of the higher cubical complexes ``K^q``.

``K^q`` is cut out of a product of ``(2q+1)``-spheres by the flag complex.
Its loop-space homotopy ranks are the LCS ranks of the Artin group placed
in degrees ``2qk``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from raagkit.errors import InvariantViolation
from raagkit.graph import Graph
from raagkit.invariants import clique_polynomial, lcs_ranks
from raagkit.polyseries import (
    DEFAULT_KMAX,
    IntPoly,
    RankTable,
    compose_scaled,
    expand_product_form,
    reciprocal,
)
from raagkit.stanley_reisner import HilbertTable

FORMALITY_NOTE = "formal and coformal when 2q+1 exceeds the clique number; stated, not computed"


@dataclass(frozen=True)
class HomotopyRankTable:
    q: int
    kmax: int
    table: dict[int, int] = field(default_factory=dict)
    formal_coformal: bool = False

    def __post_init__(self):
        step = 2 * self.q
        for m, r in self.table.items():
            if m % step and r:
                raise InvariantViolation(f"nonzero rank {r} in degree {m}, not divisible by {step}")

    def __getitem__(self, m: int) -> int:
        return self.table.get(m, 0)

    def nonzero(self) -> list[tuple[int, int]]:
        return [(m, r) for m, r in sorted(self.table.items()) if r]


def _check_q(q: int, least: int = 1):
    if q < least:
        raise ValueError(f"q must be >= {least}, got {q}")


def homotopy_ranks(g: Graph, q: int, kmax: int = DEFAULT_KMAX) -> HomotopyRankTable:
    """Ranks of ``pi_m`` of the loop space for ``m = 1..2q*kmax``."""
    _check_q(q)
    phi = lcs_ranks(g, kmax)
    step = 2 * q
    table = {m: 0 for m in range(1, step * kmax + 1)}
    for k in range(1, kmax + 1):
        table[step * k] = phi[k]
    return HomotopyRankTable(q, kmax, table, 2 * q + 1 > g.clique_number())


def loop_poincare_series(g: Graph, q: int, dmax: int = DEFAULT_KMAX) -> HilbertTable:
    """Truncated reciprocal of ``P(-t^(2q))``; coefficients must be homology
    dimensions."""
    _check_q(q)
    s = reciprocal(compose_scaled(clique_polynomial(g), -1, 2 * q, dmax))
    if not s.is_integral() or any(c < 0 for c in s.coeffs):
        raise InvariantViolation("loop-space series has a coefficient that is not a nonnegative integer")
    return HilbertTable(tuple(s.to_ints()))


def cubical_poincare_polynomial(g: Graph, q: int) -> IntPoly:
    """``P(t^(2q+1))``; ``q = 0`` is the clique polynomial itself."""
    _check_q(q, 0)
    return clique_polynomial(g).substitute(1, 2 * q + 1)


def euler_product(table: HomotopyRankTable, order: int) -> IntPoly:
    """``prod_k (1 - t^((2q+1)k))^Phi_{2qk}`` truncated at ``order``."""
    step = 2 * table.q
    exps = RankTable(table.kmax, {m // step: r for m, r in table.table.items() if m % step == 0})
    return expand_product_form(exps, order, stride=2 * table.q + 1)
