"""First resonance variety, BNS membership and component-lattice fingerprints.

The resonance variety of a right-angled Artin group is a union of
coordinate subspaces ``H_W`` spanned by vertex subsets ``W`` whose induced
subgraph is disconnected.  Only the inclusion-maximal such ``W`` matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from raagkit.enumeration import DEFAULT_GUARD, check_guard, chunk_masks, run_chunks
from raagkit.errors import GraphError
from raagkit.graph import Graph, bits, is_connected_mask, to_mask
from raagkit.linalg import rank


@dataclass(frozen=True)
class ResonanceDescription:
    ambient_dim: int
    components: tuple[frozenset[int], ...]

    @property
    def codim(self) -> int:
        if not self.components:
            return self.ambient_dim
        return self.ambient_dim - max(len(w) for w in self.components)


@dataclass(frozen=True)
class Character:
    """Rational point of ``H^1``: one value per vertex index."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(x) for x in self.values))

    @classmethod
    def from_labels(cls, g: Graph, assignment: Mapping) -> Character:
        """Unlisted vertices get 0."""
        vals = [Fraction(0)] * g.n
        for label, value in assignment.items():
            vals[g.index(label)] = Fraction(value)
        return cls(tuple(vals))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.values) if x != 0)

    def is_zero(self) -> bool:
        return not self.support

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.values)


@dataclass(frozen=True)
class LatticeFingerprint:
    """Sorted intersection dimensions over all 1-, 2- and 3-element families
    of components."""

    singles: tuple[int, ...]
    pairs: tuple[int, ...]
    triples: tuple[int, ...]

    def as_dict(self) -> dict[str, list[int]]:
        return {"singles": list(self.singles), "pairs": list(self.pairs), "triples": list(self.triples)}


def _maximal_chunk(adj, n, prefix_bits, prefix) -> list[int]:
    full = (1 << n) - 1
    found = []
    for mask in chunk_masks(n, prefix_bits, prefix):
        if is_connected_mask(adj, mask):
            continue
        # disconnected W is maximal iff every one-vertex extension is connected
        outside = full & ~mask
        while outside:
            low = outside & -outside
            if not is_connected_mask(adj, mask | low):
                break
            outside ^= low
        else:
            found.append(mask)
    return found


def _order_key(w: frozenset[int]):
    return (-len(w), tuple(sorted(w)))


def resonance_components(
    g: Graph, guard: int = DEFAULT_GUARD, allow_large: bool = False, workers: int = 1
) -> ResonanceDescription:
    """Inclusion-maximal vertex sets inducing a disconnected subgraph.

    Ordered by size (largest first), then lexicographically.
    """
    check_guard(g.n, guard, allow_large)
    found = [frozenset(bits(m)) for part in run_chunks(_maximal_chunk, g.adj, g.n, workers) for m in part]
    return ResonanceDescription(g.n, tuple(sorted(found, key=_order_key)))


def resonance_contains_combinatorial(
    g: Graph, a: Character, description: ResonanceDescription | None = None
) -> bool:
    """Is the support of ``a`` inside some component?  ``a = 0`` is always in."""
    if a.is_zero():
        return True
    if description is None:
        description = resonance_components(g)
    supp = a.support
    return any(supp <= w for w in description.components)


def resonance_contains_linear(g: Graph, a: Character) -> bool:
    """Decide membership from the cup-product equations.

    ``a`` is resonant iff some ``a'`` independent of ``a`` satisfies
    ``a_v x_w - a_w x_v = 0`` on every edge, i.e. the solution space has
    dimension at least 2.
    """
    if a.is_zero():
        return True
    rows = []
    for v, w in g.edges():
        row = [Fraction(0)] * g.n
        row[w] += a.values[v]
        row[v] -= a.values[w]
        rows.append(row)
    return g.n - rank(rows, g.n) >= 2


def _nonzero(chi: Character):
    if chi.is_zero():
        raise GraphError("the zero character is excluded")


def sigma1_contains(g: Graph, chi: Character) -> bool:
    """Support induces a connected subgraph that every other vertex touches."""
    _nonzero(chi)
    supp = to_mask(chi.support)
    if not is_connected_mask(g.adj, supp):
        return False
    return all(g.adj[v] & supp for v in range(g.n) if not supp >> v & 1)


def kernel_finitely_generated(
    g: Graph, chi: Character, description: ResonanceDescription | None = None
) -> bool:
    """For an integral character: kernel is finitely generated iff ``chi``
    avoids the resonance variety."""
    _nonzero(chi)
    if not chi.is_integral():
        raise GraphError("kernel finiteness needs an integer-valued character")
    return not resonance_contains_combinatorial(g, chi, description)


def lattice_fingerprint(r: ResonanceDescription) -> LatticeFingerprint:
    def dims(s):
        return tuple(sorted(len(frozenset.intersection(*fam)) for fam in combinations(r.components, s)))

    return LatticeFingerprint(dims(1), dims(2), dims(3))
