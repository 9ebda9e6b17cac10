"""Hilbert series of the exterior and polynomial face rings of the flag
complex, and the linear strands of their Betti tables."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from raagkit.errors import GraphError
from raagkit.graph import Graph, components
from raagkit.invariants import chen_ranks, clique_counts
from raagkit.polyseries import binomial


@dataclass(frozen=True)
class HilbertTable:
    """Graded dimensions in degrees ``0..len(coeffs)-1``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("Hilbert table must start with 1")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("Hilbert table entries must be nonnegative")

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d]


def hilbert_exterior(g: Graph, dmax: int) -> HilbertTable:
    """Exterior face ring: square-free monomials supported on cliques."""
    f = clique_counts(g)
    return HilbertTable(tuple(f[d] if d < len(f) else 0 for d in range(dmax + 1)))


def hilbert_polynomial_sr(g: Graph, dmax: int) -> HilbertTable:
    """Polynomial face ring; a k-clique carries ``C(d-1, k-1)`` monomials of
    degree ``d`` with exactly that support."""
    f = clique_counts(g)
    out = [1]
    for d in range(1, dmax + 1):
        out.append(sum(f[k] * binomial(d - 1, k - 1) for k in range(1, len(f))))
    return HilbertTable(tuple(out))


def hochster_linear_betti(g: Graph, i: int) -> int:
    """``beta_{i,i+1}`` of the polynomial face ring: reduced ``H_0`` summed
    over induced subgraphs on ``i+1`` vertices."""
    if not 1 <= i <= g.n - 1:
        raise GraphError(f"homological degree {i} outside 1..{g.n - 1}")
    return sum(components(g, w).reduced_b0 for w in combinations(range(g.n), i + 1))


def exterior_linear_betti(g: Graph, k: int, **kwargs) -> int:
    """``beta_{k-1,k}`` of the exterior face ring, which is the Chen rank ``theta_k``."""
    if k < 2:
        raise GraphError("exterior linear strand starts at k = 2")
    return chen_ranks(g, k, **kwargs)[k]
