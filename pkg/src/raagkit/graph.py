"""Finite simplicial graphs with bitmask adjacency.

Vertices are indexed densely ``0..n-1``; user-facing labels are kept
alongside.  Vertex subsets are passed around either as iterables of indices
or, in the hot loops, as integer bitmasks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from raagkit.errors import GraphError

Edge = tuple[int, int]


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Loopless finite graph without multiple edges.

    ``adj[v]`` is the neighbor bitmask of vertex ``v``.  Instances are
    immutable; every operation returns a new graph.
    """

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.adj) != n:
            raise GraphError("adjacency length does not match label count")
        if len(set(self.labels)) != n:
            raise GraphError("duplicate vertex label")
        full = (1 << n) - 1
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~full:
                raise GraphError(f"vertex {v} has a neighbor out of range")
            if nbrs >> v & 1:
                raise GraphError(f"self-loop at {self.labels[v]!r}")
            for u in bits(nbrs):
                if not self.adj[u] >> v & 1:
                    raise GraphError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, labels: Sequence, edges: Iterable[tuple]) -> Graph:
        """Build a graph from labels and label pairs.

        Rejects unknown labels, self-loops and repeated edges.
        """
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise GraphError("duplicate vertex label")
        index = {lab: i for i, lab in enumerate(labels)}
        adj = [0] * len(labels)
        for a, b in edges:
            a, b = str(a), str(b)
            for x in (a, b):
                if x not in index:
                    raise GraphError(f"unknown vertex label {x!r} in edge")
            i, j = index[a], index[b]
            if i == j:
                raise GraphError(f"self-loop at {a!r}")
            if adj[i] >> j & 1:
                raise GraphError(f"duplicate edge {a}-{b}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(labels, tuple(adj))

    @classmethod
    def from_index_edges(cls, n: int, edges: Iterable[Edge], labels=None) -> Graph:
        if labels is None:
            labels = [str(i + 1) for i in range(n)]
        lab = [str(x) for x in labels]
        return cls.from_edges(lab, [(lab[i], lab[j]) for i, j in edges])

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[Edge]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i]) if i < j]

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def index(self, label) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise GraphError(f"unknown vertex label {label!r}") from None

    def vertex_set(self, labels: Iterable) -> frozenset[int]:
        """Translate vertex labels into an index set."""
        return frozenset(self.index(x) for x in labels)

    def label_set(self, vertices: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in sorted(vertices)]

    def edge(self, a, b) -> Edge:
        i, j = self.index(a), self.index(b)
        return (min(i, j), max(i, j))

    def clique_number(self) -> int:
        return max(len(c) for c in cliques(self))


def _check_vertices(g: Graph, w: Iterable[int]) -> int:
    mask = 0
    for v in w:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise GraphError(f"vertex index {v!r} out of range for {g.n} vertices")
        mask |= 1 << v
    return mask


def induced_subgraph(g: Graph, w: Iterable[int]) -> Graph:
    mask = _check_vertices(g, w)
    keep = bits(mask)
    pos = {v: i for i, v in enumerate(keep)}
    adj = tuple(to_mask(pos[u] for u in bits(g.adj[v] & mask)) for v in keep)
    return Graph(tuple(g.labels[v] for v in keep), adj)


def component_masks(adj: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``."""
    out = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        rest &= ~comp
    return out


def count_components(adj: Sequence[int], mask: int) -> int:
    count = 0
    rest = mask
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        count += 1
        rest &= ~comp
    return count


def is_connected_mask(adj: Sequence[int], mask: int) -> bool:
    """True for one-component subsets; the empty set counts as connected."""
    if not mask:
        return True
    comp = frontier = mask & -mask
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & mask & ~comp
        comp |= new
        frontier |= new
    return comp == mask


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple[frozenset[int], ...]

    @property
    def reduced_b0(self) -> int:
        # -1 on the empty set; cut sums never consume it
        return len(self.blocks) - 1


def components(g: Graph, w: Iterable[int] | None = None) -> ComponentPartition:
    """Partition ``w`` (default: all vertices) into connected blocks.

    Blocks are ordered by their smallest vertex.
    """
    mask = g.full_mask if w is None else _check_vertices(g, w)
    return ComponentPartition(tuple(frozenset(bits(c)) for c in component_masks(g.adj, mask)))


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g.adj, g.full_mask)


def iter_cliques(g: Graph):
    """Yield clique bitmasks by ordered extension, starting with the empty set.

    Each clique is only extended by common neighbors of higher index, so
    every clique appears exactly once.
    """
    yield 0
    stack = [(1 << v, g.adj[v] & ~((2 << v) - 1)) for v in reversed(range(g.n))]
    while stack:
        clique, cand = stack.pop()
        yield clique
        for v in reversed(bits(cand)):
            stack.append((clique | 1 << v, cand & g.adj[v] & ~((2 << v) - 1)))


def cliques(g: Graph) -> list[frozenset[int]]:
    """All cliques including the empty set, by size then lexicographically."""
    found = [tuple(bits(c)) for c in iter_cliques(g)]
    found.sort(key=lambda c: (len(c), c))
    return [frozenset(c) for c in found]


def _disambiguate(g1: Graph, g2: Graph) -> tuple[list[str], list[str]]:
    if set(g1.labels) & set(g2.labels):
        return [f"a.{x}" for x in g1.labels], [f"b.{x}" for x in g2.labels]
    return list(g1.labels), list(g2.labels)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    l1, l2 = _disambiguate(g1, g2)
    shift = g1.n
    adj = g1.adj + tuple(nb << shift for nb in g2.adj)
    return Graph(tuple(l1 + l2), adj)


def join(g1: Graph, g2: Graph) -> Graph:
    l1, l2 = _disambiguate(g1, g2)
    shift = g1.n
    right = g2.full_mask << shift
    adj = tuple(nb | right for nb in g1.adj) + tuple(nb << shift | g1.full_mask for nb in g2.adj)
    return Graph(tuple(l1 + l2), adj)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.labels, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def delete_edge(g: Graph, e: Edge) -> Graph:
    i, j = e
    if not g.has_edge(i, j):
        raise GraphError(f"{g.labels[i]}-{g.labels[j]} is not an edge")
    adj = list(g.adj)
    adj[i] &= ~(1 << j)
    adj[j] &= ~(1 << i)
    return Graph(g.labels, tuple(adj))


def delete_vertices(g: Graph, vs: Iterable[int]) -> Graph:
    drop = _check_vertices(g, vs)
    return induced_subgraph(g, bits(g.full_mask & ~drop))


def is_near_bridge(g: Graph, e: Edge) -> bool:
    """True iff every cycle through ``e`` visits all vertices.

    Equivalently: for each vertex ``w`` off ``e``, the endpoints of ``e`` are
    disconnected in ``g`` minus ``e`` with ``w`` removed.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"{g.labels[u]}-{g.labels[v]} is not an edge")
    adj = list(delete_edge(g, e).adj)
    for w in range(g.n):
        if w in (u, v):
            continue
        mask = g.full_mask & ~(1 << w)
        for comp in component_masks(adj, mask):
            if comp >> u & 1:
                if comp >> v & 1:
                    return False
                break
    return True


# -- standard families -------------------------------------------------------

TRIFORCE6_EDGES = ["12", "13", "23", "24", "25", "35", "36", "45", "56"]
GRID6_EDGES = ["12", "23", "14", "25", "36", "45", "56", "15", "26"]

_FAMILY_MIN = {"path": 1, "dynkinD": 3, "cycle": 3, "complete": 0, "empty": 0, "ycycle": 4}
_FAMILY_RE = re.compile(r"^\s*([A-Za-z][A-Za-z0-9]*?)\s*(?::\s*(\d+))?\s*$")


def _numbered(n: int, edges: Iterable[Edge]) -> Graph:
    return Graph.from_index_edges(n, edges)


def path_graph(n: int) -> Graph:
    return _numbered(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return _numbered(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete_graph(n: int) -> Graph:
    return _numbered(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return _numbered(n, [])


def dynkin_d_graph(n: int) -> Graph:
    # chain 1..n-1, vertex n hangs off n-2
    return _numbered(n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)])


def ycycle_graph(n: int) -> Graph:
    # (n-1)-circuit on 1..n-1, pendant vertex n attached to 1
    m = n - 1
    return _numbered(n, [(i, i + 1) for i in range(m - 1)] + [(0, m - 1), (0, n - 1)])


def _six(edges: list[str]) -> Graph:
    return Graph.from_edges([str(i) for i in range(1, 7)], [(e[0], e[1]) for e in edges])


_BUILDERS = {
    "path": path_graph,
    "dynkinD": dynkin_d_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "empty": empty_graph,
    "ycycle": ycycle_graph,
}


def family(spec: str) -> Graph:
    """Build a named graph: ``path:n``, ``dynkinD:n``, ``cycle:n``,
    ``complete:n``, ``empty:n``, ``ycycle:n``, ``triforce6`` or ``grid6``."""
    m = _FAMILY_RE.match(spec)
    if not m:
        raise GraphError(f"malformed family spec {spec!r}")
    name, num = m.group(1), m.group(2)
    if name in ("triforce6", "grid6"):
        if num is not None:
            raise GraphError(f"{name} takes no size")
        return _six(TRIFORCE6_EDGES if name == "triforce6" else GRID6_EDGES)
    if name not in _BUILDERS:
        raise GraphError(f"unknown graph family {name!r}")
    if num is None:
        raise GraphError(f"family {name!r} needs a size, e.g. {name}:5")
    n = int(num)
    if n < _FAMILY_MIN[name]:
        raise GraphError(f"{name} needs n >= {_FAMILY_MIN[name]}, got {n}")
    return _BUILDERS[name](n)
