from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coxeuler.algebra import (
    ONE,
    T,
    ZERO,
    InexactDivisionError,
    Polynomial,
    TruncatedSeries,
    bisection_real_root_count,
    exp_linear,
    poly_derivative,
    poly_divmod,
    poly_exact_div_t,
    poly_gcd,
    poly_reverse,
    series_partial,
    series_product,
    squarefree_part,
    sturm_real_root_count,
)

P = Polynomial
coeff_lists = st.lists(st.integers(-50, 50), max_size=7)
polys = coeff_lists.map(Polynomial)


def test_normalisation_and_degree():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert ZERO.degree == -1 and ZERO.is_zero()
    assert P([Fraction(4, 2)]).coeffs == (2,)
    assert isinstance(P([Fraction(4, 2)]).coeffs[0], int)


def test_parse_and_str_round_trip():
    p = Polynomial.parse("7t+34t^2+7t^3")
    assert p == P([0, 7, 34, 7])
    assert str(Polynomial.parse("1+11t+11t^2+t^3")) == "1+11t+11t^2+t^3"
    assert Polynomial.parse(str(P([3, -1, 0, 5]))) == P([3, -1, 0, 5])


@pytest.mark.parametrize("p,want", [(ONE, ZERO), (P([0, 1, 1]), P([1, 2])), (P([0, 3, 3]), P([3, 6]))])
def test_derivative(p, want):
    assert poly_derivative(p) == want


def test_reverse_examples():
    assert poly_reverse(P([0, 0, 17, 30, 1]), 4) == P([1, 30, 17])
    assert poly_reverse(T, 2) == T
    assert poly_reverse(ONE, 0) == ONE
    with pytest.raises(ValueError):
        poly_reverse(P([0, 0, 1]), 1)


def test_exact_div_t():
    assert poly_exact_div_t(P([0, 0, 5, 1]), 2) == P([5, 1])
    assert poly_exact_div_t(T, 1) == ONE
    with pytest.raises(InexactDivisionError):
        poly_exact_div_t(P([1, 1]), 1)


def test_big_integers_are_exact():
    big = P([10**40, 1])
    assert (big * big).coeff(0) == 10**80


@given(polys, st.integers(0, 3))
def test_reverse_is_involution(p, extra):
    n = max(p.degree, 0) + extra
    assert poly_reverse(poly_reverse(p, n), n) == p


@given(polys, polys)
def test_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(polys, polys.filter(lambda q: not q.is_zero()))
def test_divmod(a, b):
    q, r = poly_divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, polys)
def test_gcd_divides(a, b):
    g = poly_gcd(a, b)
    if not g.is_zero():
        assert poly_divmod(a, g)[1].is_zero()
        assert poly_divmod(b, g)[1].is_zero()


# -- truncated series ------------------------------------------------------


def test_series_product_examples():
    a = TruncatedSeries.from_terms(2, {0: 1, 1: 1})
    b = TruncatedSeries.from_terms(2, {0: 1, 1: -1})
    assert series_product(a, b) == TruncatedSeries.from_terms(2, {0: 1, 2: -1})
    e = exp_linear(P([1, -1]), 2)
    u = P([1, -1])
    want = TruncatedSeries.from_terms(2, {0: 1, 1: 2 * u, 2: 2 * u * u})
    assert series_product(e, e) == want
    assert series_product(a, TruncatedSeries.zero(2)) == TruncatedSeries.zero(2)


def test_exp_linear_examples():
    assert exp_linear(ZERO, 5) == TruncatedSeries.constant(ONE, 5)
    u = P([1, -1])
    assert exp_linear(u, 2) == TruncatedSeries.from_terms(2, {0: 1, 1: u, 2: u * u * Fraction(1, 2)})
    assert exp_linear(P([2, -2]), 1) == TruncatedSeries.from_terms(1, {0: 1, 1: P([2, -2])})


def test_partials_and_valid_slots():
    s = TruncatedSeries.from_terms(2, {0: 1, 1: 1, 2: Fraction(1, 2)})
    d = series_partial(s, "x")
    assert d[0] == ONE and d[1] == ONE and d[2] == ZERO
    assert d.valid == 1
    assert series_partial(series_partial(s, "x"), "x").valid == 0
    t2 = TruncatedSeries.from_terms(3, {1: P([0, 0, 1])})
    assert series_partial(t2, "t") == TruncatedSeries.from_terms(3, {1: P([0, 2])})
    assert (d + s).valid == 1
    with pytest.raises(ValueError):
        series_partial(s, "y")


series_st = st.lists(coeff_lists.map(Polynomial), min_size=1, max_size=6).map(
    lambda cs: TruncatedSeries(len(cs) - 1, tuple(cs))
)


@given(series_st, series_st)
def test_series_product_commutes(a, b):
    n = min(a.order, b.order)
    a = TruncatedSeries(n, a.coeffs[: n + 1])
    b = TruncatedSeries(n, b.coeffs[: n + 1])
    assert series_product(a, b) == series_product(b, a)


@given(polys, st.integers(0, 6))
def test_exp_inverse(u, order):
    assert series_product(exp_linear(u, order), exp_linear(-u, order)) == TruncatedSeries.constant(ONE, order)


@given(series_st)
def test_mixed_partials_commute(s):
    xt = series_partial(series_partial(s, "x"), "t")
    tx = series_partial(series_partial(s, "t"), "x")
    assert xt == tx


# -- real roots ------------------------------------------------------------


@pytest.mark.parametrize(
    "p,count",
    [(P([1, 0, 1]), 0), (P([2, -3, 1]), 2), (P([1, 11, 11, 1]), 3), (P([1, 2, 1]), 1), (P([5]), 0)],
)
def test_root_counts(p, count):
    r = sturm_real_root_count(p)
    assert r.distinct_real_roots == count
    assert bisection_real_root_count(p) == count


def test_sturm_result_fields():
    r = sturm_real_root_count(P([1, 11, 11, 1]))
    assert r.all_real and r.degree_of_squarefree_part == 3
    r = sturm_real_root_count(P([1, 2, 1]))
    assert r.degree_of_squarefree_part == 1 and r.all_real
    assert squarefree_part(P([1, 2, 1])) == P([1, 1])
    assert not sturm_real_root_count(P([1, 0, 1])).all_real


@settings(max_examples=150)
@given(st.lists(st.integers(-6, 6).filter(lambda x: x != 0) | st.just(0), min_size=2, max_size=7))
def test_sturm_matches_bisection(cs):
    p = P(cs)
    if p.degree < 1:
        return
    assert sturm_real_root_count(p).distinct_real_roots == bisection_real_root_count(p)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5, unique=True))
def test_sturm_on_products_of_linears(roots):
    p = ONE
    for r in roots:
        p = p * P([-r, 1])
    assert sturm_real_root_count(p).distinct_real_roots == len(roots)
    assert sturm_real_root_count(p * p).distinct_real_roots == len(roots)
