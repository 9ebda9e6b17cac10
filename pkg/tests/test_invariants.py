import networkx as nx
import pytest
from hypothesis import assume, given, settings

from conftest import brute_cliques, brute_cut_numbers, graphs, to_nx
from raagkit import oracles
from raagkit.errors import GraphError, GuardExceeded
from raagkit.graph import delete_edge, disjoint_union, family, is_near_bridge, join
from raagkit.invariants import (
    chen_ranks,
    clique_polynomial,
    clique_polynomial_recursive,
    connectivity,
    cut_numbers,
    cut_numbers_recursive,
    cut_polynomial,
    cut_recursion_add_singleton,
    cut_recursion_near_bridge,
    lcs_ranks,
)
from raagkit.polyseries import IntPoly, binomial


@pytest.mark.parametrize("n", range(2, 9))
def test_clique_polynomial_families(n):
    assert clique_polynomial(family(f"path:{n}")) == IntPoly.of(1, n, n - 1)
    if n >= 4:
        assert clique_polynomial(family(f"cycle:{n}")) == IntPoly.of(1, n, n)


def test_clique_polynomial_example_pair():
    for spec in ("triforce6", "grid6"):
        assert clique_polynomial(family(spec)) == IntPoly.of(1, 6, 9, 4)


def test_clique_recursion_base_and_triangle():
    assert clique_polynomial_recursive(family("empty:5")) == IntPoly.of(1, 5)
    assert clique_polynomial_recursive(family("complete:3")) == IntPoly.of(1, 3, 3, 1)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_clique_recursion_matches_enumeration(g):
    assert clique_polynomial_recursive(g) == clique_polynomial(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_clique_polynomial_brute_force(g):
    assert clique_polynomial(g).to_list() == brute_cliques(g)


@pytest.mark.parametrize(
    "spec,expected",
    [("path:4", [3, 2, 0]), ("cycle:4", [2, 0, 0]), ("triforce6", [6, 8, 3, 0, 0]), ("grid6", [6, 8, 3, 0, 0])],
)
def test_cut_number_examples(spec, expected):
    g = family(spec)
    brute = brute_cut_numbers(g)
    assert [brute[j] for j in range(2, g.n + 1)] == expected
    assert cut_numbers(g).values() == expected


def test_cut_polynomial_complete_is_zero():
    assert cut_polynomial(family("complete:5")) == IntPoly()


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_cut_numbers_brute_force(g):
    brute = brute_cut_numbers(g)
    prof = cut_numbers(g)
    assert all(prof[j] == brute[j] for j in brute)
    assert prof[2] == binomial(g.n, 2) - g.num_edges()


def test_cut_numbers_deterministic_across_workers():
    g = family("triforce6")
    assert cut_numbers(g, workers=1) == cut_numbers(g, workers=3)


def test_cut_numbers_guard():
    with pytest.raises(GuardExceeded):
        cut_numbers(family("path:9"), guard=8)
    assert cut_numbers(family("path:9"), guard=8, allow_large=True) == cut_numbers(family("path:9"))


@pytest.mark.parametrize("n", range(4, 10))
def test_near_bridge_lemma_on_circuits(n):
    c = family(f"cycle:{n}")
    e = c.edges()[0]
    prof = cut_recursion_near_bridge(c, e)
    path = cut_numbers(family(f"path:{n}"))
    assert all(prof[j] == path[j] - binomial(n - 2, j - 2) for j in range(2, n))
    assert prof == cut_numbers(c)


def test_near_bridge_lemma_small_value():
    c = family("cycle:4")
    assert cut_recursion_near_bridge(c, c.edge("1", "2"))[2] == 2


def test_near_bridge_lemma_rejects_non_near_bridge():
    t = family("triforce6")
    with pytest.raises(GraphError):
        cut_recursion_near_bridge(t, t.edge("2", "3"))


def test_singleton_lemma_examples():
    assert cut_recursion_add_singleton(family("empty:2"))[2] == 1
    g = disjoint_union(family("path:3"), family("complete:1"))
    assert cut_recursion_add_singleton(g) == cut_numbers(g)
    with pytest.raises(GraphError):
        cut_recursion_add_singleton(family("path:3"))


@pytest.mark.parametrize("spec", [f"path:{n}" for n in range(3, 10)] + [f"dynkinD:{n}" for n in range(4, 10)])
def test_tree_induction_reproduces_closed_form(spec):
    g = family(spec)
    n = g.n
    prof = cut_numbers_recursive(g)
    assert all(prof[j] == oracles.tree_cut_numbers(n, j) for j in range(2, n))
    assert prof[n] == 0


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_lemma_recursions_match_enumeration(g):
    prof = cut_numbers(g)
    assert cut_numbers_recursive(g) == prof
    for e in g.edges():
        if is_near_bridge(g, e):
            assert cut_recursion_near_bridge(g, e) == prof
    if any(nb == 0 for nb in g.adj):
        assert cut_recursion_add_singleton(g) == prof


@pytest.mark.parametrize("spec,kappa", [("path:4", 1), ("cycle:5", 2), ("complete:4", 4), ("empty:3", 0), ("triforce6", 2)])
def test_connectivity_examples(spec, kappa):
    assert connectivity(family(spec)).kappa == kappa


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    complete = g.num_edges() == g.n * (g.n - 1) // 2
    expected = g.n if complete else nx.node_connectivity(h)
    assert connectivity(g).kappa == expected


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_cut_degree_bound(g):
    prof = cut_numbers(g)
    top = max((j for j in range(2, g.n + 1) if prof[j]), default=0)
    assert top <= g.n - connectivity(g).kappa


@pytest.mark.parametrize("spec", [f"path:{n}" for n in range(3, 9)] + [f"cycle:{n}" for n in range(4, 9)])
def test_cut_degree_bound_is_attained(spec):
    g = family(spec)
    top = max(j for j in range(2, g.n + 1) if cut_numbers(g)[j])
    assert top == g.n - connectivity(g).kappa


def test_lcs_examples():
    assert lcs_ranks(family("complete:4"), 6).values() == [4, 0, 0, 0, 0, 0]
    assert lcs_ranks(family("empty:2"), 5).values() == [2, 1, 2, 3, 6]
    assert lcs_ranks(family("triforce6"), 4).values() == [6, 6, 20, 60]


def test_chen_examples():
    assert chen_ranks(family("path:4"), 4).values() == [4, 3, 8, 15]
    assert chen_ranks(family("triforce6"), 4).values() == [6, 6, 20, 45]
    assert chen_ranks(family("complete:5"), 6).values() == [5, 0, 0, 0, 0, 0]


@pytest.mark.parametrize("n", range(3, 10))
def test_chen_tree_formula(n):
    g = family(f"path:{n}")
    theta = chen_ranks(g, 12)
    assert all(theta[k] == (k - 1) * binomial(k + n - 3, k) for k in range(2, 13))


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_lcs_versus_chen(g):
    phi, theta = lcs_ranks(g, 12), chen_ranks(g, 12)
    assert phi[1] == theta[1] == g.n
    assert phi[2] == theta[2] and phi[3] == theta[3]
    assert all(phi[k] >= theta[k] for k in range(4, 13))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=5), graphs(min_n=1, max_n=5))
def test_lcs_additive_under_join(g1, g2):
    a, b, ab = lcs_ranks(g1, 8), lcs_ranks(g2, 8), lcs_ranks(join(g1, g2), 8)
    assert all(ab[k] == a[k] + b[k] for k in range(1, 9))


def test_family_oracle_values():
    assert oracles.tree_cut_numbers(4, 2) == 3
    assert oracles.free_chen(2, 8) == {k: k - 1 for k in range(2, 9)}
    for n in range(5, 10):
        circ, ycyc = oracles.circuit_chen_series(n, 12), oracles.ycycle_chen_series(n, 12)
        assert all(circ[k] == ycyc[k] for k in range(2, n - 1))
        assert all(ycyc[k] > circ[k] for k in range(n - 1, 13))
    with pytest.raises(ValueError):
        oracles.ycycle_chen_series(4, 6)
    with pytest.raises(ValueError):
        oracles.circuit_chen_series(3, 6)


@pytest.mark.parametrize("n", range(4, 10))
def test_circuit_chen_pipeline_matches_closed_form(n):
    theta = chen_ranks(family(f"cycle:{n}"), 12)
    assert {k: theta[k] for k in range(2, 13)} == oracles.circuit_chen_series(n, 12)


def test_near_bridge_deletion_of_cycle_is_path():
    c = family("cycle:6")
    assert cut_numbers(delete_edge(c, c.edge("1", "6"))) == cut_numbers(family("path:6"))


@settings(max_examples=50, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_recursion_rejects_when_precondition_fails(g):
    bad = [e for e in g.edges() if not is_near_bridge(g, e)]
    assume(bad)
    with pytest.raises(GraphError):
        cut_recursion_near_bridge(g, bad[0])
