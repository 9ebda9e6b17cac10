from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from raagkit.graph import Graph, disjoint_union, family, join

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record():
    def _record(criterion: str, ok: bool, detail: str = ""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {criterion}{'  ' + detail if detail else ''}")
        return ok

    return _record


def random_graph(n: int, edge_bits: int) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    return Graph.from_index_edges(n, [p for i, p in enumerate(pairs) if edge_bits >> i & 1])


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    return random_graph(n, draw(st.integers(0, (1 << m) - 1)))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_cliques(g: Graph) -> list[int]:
    counts = []
    for k in range(g.n + 1):
        c = sum(all(g.has_edge(a, b) for a, b in itertools.combinations(w, 2)) for w in itertools.combinations(range(g.n), k))
        if c == 0:
            break
        counts.append(c)
    return counts


def brute_cut_numbers(g: Graph) -> dict[int, int]:
    h = to_nx(g)
    return {
        j: sum(nx.number_connected_components(h.subgraph(w)) - 1 for w in itertools.combinations(range(g.n), j))
        for j in range(2, g.n + 1)
    }


def _fixed_random(seed: int, n: int) -> Graph:
    import random

    rng = random.Random(seed)
    m = n * (n - 1) // 2
    return random_graph(n, rng.getrandbits(m))


TEST_GRAPH_SPECS = (
    [f"path:{n}" for n in range(1, 10)]
    + [f"dynkinD:{n}" for n in range(4, 10)]
    + [f"cycle:{n}" for n in range(3, 10)]
    + [f"ycycle:{n}" for n in range(5, 10)]
    + [f"complete:{n}" for n in range(1, 7)]
    + [f"empty:{n}" for n in range(1, 7)]
    + ["triforce6", "grid6"]
)


def test_graphs() -> list[tuple[str, Graph]]:
    out = [(s, family(s)) for s in TEST_GRAPH_SPECS]
    out.append(("join(cycle:4,path:3)", join(family("cycle:4"), family("path:3"))))
    out.append(("union(triforce6,path:2)", disjoint_union(family("triforce6"), family("path:2"))))
    out += [(f"random{seed}", _fixed_random(seed, 5 + seed % 4)) for seed in range(8)]
    return out


test_graphs.__test__ = False
