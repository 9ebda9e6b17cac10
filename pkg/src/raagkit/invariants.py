"""Graph-level inputs to the rank formulas: clique and cut polynomials,
connectivity, and the assembled LCS / Chen rank tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from raagkit.enumeration import DEFAULT_GUARD, check_guard, chunk_masks, run_chunks
from raagkit.errors import GraphError
from raagkit.graph import (
    Edge,
    Graph,
    bits,
    count_components,
    delete_edge,
    delete_vertices,
    is_connected,
    is_connected_mask,
    is_near_bridge,
    iter_cliques,
)
from raagkit.polyseries import (
    DEFAULT_KMAX,
    IntPoly,
    RankTable,
    binomial,
    geometric_substitution,
    product_form_inversion,
)


def clique_counts(g: Graph) -> list[int]:
    """``f_k`` for ``k = 0..clique number``."""
    counts: list[int] = []
    for c in iter_cliques(g):
        k = c.bit_count()
        if k >= len(counts):
            counts.extend([0] * (k + 1 - len(counts)))
        counts[k] += 1
    return counts


def clique_polynomial(g: Graph) -> IntPoly:
    return IntPoly(tuple(clique_counts(g)))


@lru_cache(maxsize=None)
def _clique_poly_rec(adj: tuple[int, ...], mask: int) -> IntPoly:
    for u in bits(mask):
        nbrs = adj[u] & mask
        if nbrs:
            v = (nbrs & -nbrs).bit_length() - 1
            break
    else:
        return IntPoly.of(1, mask.bit_count())
    cut = list(adj)
    cut[u] &= ~(1 << v)
    cut[v] &= ~(1 << u)
    # cliques through both u and v = {u, v} plus a clique of the common neighborhood
    common = adj[u] & adj[v] & mask
    return _clique_poly_rec(tuple(cut), mask) + _clique_poly_rec(adj, common).shift(2)


def clique_polynomial_recursive(g: Graph) -> IntPoly:
    """Clique polynomial by edge deletion, down to edgeless graphs (``1 + m t``)."""
    return _clique_poly_rec(g.adj, g.full_mask)


@dataclass(frozen=True)
class CutProfile:
    """Cut numbers ``c_j`` for ``j = 2..n``."""

    n: int
    c: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, j: int) -> int:
        return self.c.get(j, 0)

    def values(self) -> list[int]:
        return [self[j] for j in range(2, self.n + 1)]

    def polynomial(self) -> IntPoly:
        return IntPoly(tuple(self[j] for j in range(self.n + 1)))


def _cut_chunk(adj, n, prefix_bits, prefix) -> list[int]:
    sums = [0] * (n + 1)
    for mask in chunk_masks(n, prefix_bits, prefix):
        if mask & (mask - 1):
            sums[mask.bit_count()] += count_components(adj, mask) - 1
    return sums


def cut_numbers(
    g: Graph, guard: int = DEFAULT_GUARD, allow_large: bool = False, workers: int = 1
) -> CutProfile:
    """``c_j = sum over j-subsets W of (components of the induced graph - 1)``.

    One pass over all ``2**n`` subsets fills every ``j`` at once.
    """
    check_guard(g.n, guard, allow_large)
    total = [0] * (g.n + 1)
    for part in run_chunks(_cut_chunk, g.adj, g.n, workers):
        total = [a + b for a, b in zip(total, part)]
    return CutProfile(g.n, {j: total[j] for j in range(2, g.n + 1)})


def cut_polynomial(g: Graph, **kwargs) -> IntPoly:
    return cut_numbers(g, **kwargs).polynomial()


def cut_recursion_near_bridge(g: Graph, e: Edge, base: CutProfile | None = None) -> CutProfile:
    """Cut numbers of ``g`` from those of ``g`` minus the near-bridge ``e``.

    ``base`` is the profile of ``g - e``; computed by enumeration if omitted.
    The top cut number is read off the component count of ``g`` directly.
    """
    if not is_near_bridge(g, e):
        raise GraphError(f"{g.labels[e[0]]}-{g.labels[e[1]]} is not a near-bridge")
    n = g.n
    if base is None:
        base = cut_numbers(delete_edge(g, e))
    c = {j: base[j] - binomial(n - 2, j - 2) for j in range(2, n)}
    c[n] = count_components(g.adj, g.full_mask) - 1
    return CutProfile(n, c)


def isolated_vertex(g: Graph) -> int | None:
    """Highest-index isolated vertex, if any."""
    for v in reversed(range(g.n)):
        if not g.adj[v]:
            return v
    return None


def cut_recursion_add_singleton(g: Graph, base: CutProfile | None = None) -> CutProfile:
    """Cut numbers of ``g = g' + K_1`` from those of ``g'``.

    ``g'`` is ``g`` without its highest-index isolated vertex; ``base`` is its
    profile, computed by enumeration if omitted.
    """
    v = isolated_vertex(g)
    if v is None:
        raise GraphError("graph has no isolated vertex")
    n = g.n
    if base is None:
        base = cut_numbers(delete_vertices(g, [v]))
    c = {j: base[j] + base[j - 1] + binomial(n - 1, j - 1) for j in range(2, n + 1)}
    return CutProfile(n, c)


def cut_numbers_recursive(g: Graph) -> CutProfile:
    """Cut numbers via the singleton and near-bridge recursions.

    Peels isolated vertices, then deletes near-bridges; falls back to
    enumeration when neither applies.
    """
    if g.n == 0:
        return CutProfile(0)
    v = isolated_vertex(g)
    if v is not None:
        return cut_recursion_add_singleton(g, cut_numbers_recursive(delete_vertices(g, [v])))
    for e in g.edges():
        if is_near_bridge(g, e):
            return cut_recursion_near_bridge(g, e, cut_numbers_recursive(delete_edge(g, e)))
    return cut_numbers(g)


@dataclass(frozen=True)
class Connectivity:
    kappa: int


def connectivity(g: Graph) -> Connectivity:
    """Fewest vertex deletions leaving a disconnected induced graph.

    ``kappa = 0`` for disconnected graphs and ``kappa = n`` for complete ones.
    """
    n = g.n
    if not is_connected(g):
        return Connectivity(0)
    full = g.full_mask
    for r in range(1, n - 1):
        for drop in combinations(range(n), r):
            rest = full
            for v in drop:
                rest &= ~(1 << v)
            if not is_connected_mask(g.adj, rest):
                return Connectivity(r)
    return Connectivity(n)


def lcs_ranks(g: Graph, kmax: int = DEFAULT_KMAX) -> RankTable:
    """``phi_k`` from ``prod (1 - t^k)^phi_k = P(-t)``."""
    return product_form_inversion(clique_polynomial(g).substitute(-1), kmax)


def chen_ranks(g: Graph, kmax: int = DEFAULT_KMAX, **kwargs) -> RankTable:
    """``theta_k`` from ``sum theta_k t^k = Q(t/(1-t))``, with ``theta_1 = n``."""
    table = geometric_substitution(cut_polynomial(g, **kwargs), kmax)
    return table.with_rank(1, g.n)
