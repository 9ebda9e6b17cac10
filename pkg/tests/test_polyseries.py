import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from raagkit.errors import InvariantViolation
from raagkit.invariants import clique_polynomial
from raagkit.polyseries import (
    IntPoly,
    RankTable,
    RatSeries,
    binomial,
    compose_scaled,
    expand_product_form,
    geometric_substitution,
    log,
    moebius,
    power,
    product_form_inversion,
    product_form_inversion_log,
    reciprocal,
)


def lyndon_count(n: int, k: int) -> int:
    """Aperiodic necklaces by brute force: words strictly smaller than all rotations."""
    count = 0
    for w in itertools.product(range(n), repeat=k):
        if all(w < w[i:] + w[:i] for i in range(1, k)):
            count += 1
    return count


def test_lyndon_oracle_small_values():
    assert [lyndon_count(2, k) for k in range(1, 7)] == [2, 1, 2, 3, 6, 9]


def test_inversion_free_group_rank_two():
    expected = [lyndon_count(2, k) for k in range(1, 5)]
    assert expected == [2, 1, 2, 3]
    assert product_form_inversion(IntPoly.of(1, -2), 4).values() == expected


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_inversion_free_abelian(n):
    p = IntPoly.of(1, -1)
    acc = IntPoly.of(1)
    for _ in range(n):
        acc = acc * p
    assert product_form_inversion(acc, 8).values() == [n] + [0] * 7


def test_inversion_factored_cubic():
    p = IntPoly.of(1, -6, 9, -4)
    assert p == IntPoly.of(1, -1) * IntPoly.of(1, -1) * IntPoly.of(1, -4)
    witt4 = [lyndon_count(4, k) for k in range(1, 5)]
    expected = [witt4[0] + 2] + witt4[1:]
    assert expected == [6, 6, 20, 60]
    assert product_form_inversion(p, 4).values() == expected


def test_inversion_errors():
    with pytest.raises(ValueError):
        product_form_inversion(IntPoly.of(2, 1), 3)
    with pytest.raises(InvariantViolation):
        product_form_inversion(IntPoly.of(1, 1), 3)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8), st.integers(1, 12))
def test_inversion_routes_agree_and_round_trip(g, kmax):
    p = clique_polynomial(g).substitute(-1)
    table = product_form_inversion(p, kmax)
    assert table.values() == product_form_inversion_log(p, kmax).values()
    expanded = expand_product_form(table, kmax)
    assert expanded.coeffs == IntPoly(p.coeffs[: kmax + 1]).coeffs


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=5), graphs(max_n=5))
def test_inversion_multiplicative(g1, g2):
    p = clique_polynomial(g1).substitute(-1)
    q = clique_polynomial(g2).substitute(-1)
    a, b, ab = (product_form_inversion(x, 10) for x in (p, q, p * q))
    assert all(ab[k] == a[k] + b[k] for k in range(1, 11))


def test_geometric_power_identity():
    order = 15
    x = RatSeries((0, 1), order) * reciprocal(RatSeries((1, -1), order))
    for j in range(1, 8):
        s = power(x, j)
        assert [s[k] for k in range(order + 1)] == [binomial(k - 1, j - 1) if k >= 1 else 0 for k in range(order + 1)]


def test_geometric_substitution_examples():
    assert geometric_substitution(IntPoly.of(0, 0, 2), 6).values() == [2 * (k - 1) for k in range(2, 7)]
    t = geometric_substitution(IntPoly.of(0, 0, 6, 8, 3), 4)
    assert [t[2], t[3], t[4]] == [6, 20, 45]
    assert geometric_substitution(IntPoly(), 5).values() == [0, 0, 0, 0]
    with pytest.raises(ValueError):
        geometric_substitution(IntPoly.of(0, 1, 1), 4)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 50), min_size=0, max_size=6), st.lists(st.integers(0, 50), min_size=0, max_size=6))
def test_geometric_substitution_linear(a, b):
    p, q = IntPoly(tuple([0, 0] + a)), IntPoly(tuple([0, 0] + b))
    s = geometric_substitution(p + q, 10).values()
    assert s == [x + y for x, y in zip(geometric_substitution(p, 10).values(), geometric_substitution(q, 10).values())]


def test_reciprocal_and_log():
    assert reciprocal(RatSeries((1, -1), 3)).coeffs == (1, 1, 1, 1)
    assert log(RatSeries((1, -1), 3)).coeffs == (0, -1, Fraction(-1, 2), Fraction(-1, 3))
    with pytest.raises(ValueError):
        reciprocal(RatSeries((2, 1), 3))
    with pytest.raises(ValueError):
        log(RatSeries((0, 1), 3))


def test_series_truncation_order_propagates():
    a, b = RatSeries((1, 2, 3), 5), RatSeries((1, 1), 3)
    assert (a * b).order == 3 and (a + b).order == 3


def test_compose_scaled():
    s = compose_scaled(IntPoly.of(1, 3, 2), -1, 2, 5)
    assert s.coeffs == (1, 0, -3, 0, 2, 0)


def test_moebius_values():
    assert [moebius(m) for m in (1, 2, 3, 4, 6, 12)] == [1, -1, -1, 0, 1, 0]
    with pytest.raises(ValueError):
        moebius(0)


def test_intpoly_trims_and_evaluates():
    assert IntPoly.of(1, 2, 0, 0).coeffs == (1, 2)
    assert IntPoly.of(0, 0).degree == -1
    assert IntPoly.of(1, 6, 9, 4)(1) == 20


def test_rank_table_rejects_negative():
    with pytest.raises(InvariantViolation):
        RankTable(3, {1: -1})
