import math

import pytest

from coxeuler.algebra import ONE, Polynomial
from coxeuler.recurrences import (
    BASE_ROW,
    build_ladder,
    d_numbers_via_corollary,
    d_poly_via_partition,
    d_poly_via_theorem,
    eulerian_step,
    sub_numbers_step,
    sub_polys_step,
    sub_rows,
)
from coxeuler.tables import REFERENCE_ROWS, STATS, brute_force_eulerian, brute_force_sub_row

P = Polynomial.parse
D3 = P("1+11t+11t^2+t^3")
D4 = P("1+44t+102t^2+44t^3+t^4")
D5 = P("1+157t+802t^2+802t^3+157t^4+t^5")


def test_numbers_step_from_base():
    row3 = sub_numbers_step(BASE_ROW)
    assert row3.p1 == P("3t+3t^2")
    assert row3.p01 == P("5t^2+t^3")


def test_polys_step_from_base():
    assert sub_polys_step(BASE_ROW).p1 == P("3t+3t^2")


@pytest.mark.parametrize("method", ["polys", "numbers"])
def test_sub_chains_reach_published_rows(method):
    rows = {r.n: r for r in sub_rows(6, method)}
    for n in range(2, 7):
        for stat in STATS:
            assert rows[n].get(stat) == P(REFERENCE_ROWS[stat][n])


def test_sub_chains_agree_and_match_oracle():
    a, b = sub_rows(25, "polys"), sub_rows(25, "numbers")
    assert a == b
    for r in a[:7]:
        assert r == brute_force_sub_row(r.n)


def test_step_preconditions():
    with pytest.raises(ValueError):
        sub_polys_step(brute_force_sub_row(2).__class__(1, ONE, ONE, ONE, ONE))


def test_eulerian_step_examples():
    assert eulerian_step("A", ONE, 1) == ONE
    assert eulerian_step("B", ONE, 1) == P("1+t")
    assert eulerian_step("B", P("1+t"), 2) == P("1+6t+t^2")
    with pytest.raises(ValueError):
        eulerian_step("D", ONE, 2)


def test_partition_examples():
    assert d_poly_via_partition(BASE_ROW) == D3
    assert d_poly_via_partition(sub_polys_step(BASE_ROW)) == D4
    for row in sub_rows(12):
        assert d_poly_via_partition(row, "reduced") == d_poly_via_partition(row, "summed")


def test_theorem_examples():
    d0, d1, d2 = ONE, ONE, P("1+2t+t^2")
    assert d_poly_via_theorem(d2, d1, d0, 1) == D3
    assert d_poly_via_theorem(D3, d2, d1, 2) == D4
    assert d_poly_via_theorem(D4, D3, d2, 3) == D5
    printed = d_poly_via_theorem(D4, D3, d2, 3, printed=True)
    assert printed.coeff(2) == 754
    # the sign does not matter while n(n-1)(n-2) vanishes
    assert d_poly_via_theorem(D3, d2, d1, 2, printed=True) == D4


def test_corollary_examples():
    d2 = (1, 2, 1)
    assert d_numbers_via_corollary(D4.coeffs, D3.coeffs, d2, 3, 2) == 802
    assert d_numbers_via_corollary(D3.coeffs, d2, (1,), 2, 1) == 44
    assert d_numbers_via_corollary(D3.coeffs, d2, (1,), 2, 2) == 102
    assert d_numbers_via_corollary(D3.coeffs, d2, (1,), 2, 2, printed=True) == 114


@pytest.mark.parametrize("method", ["partition", "theorem", "corollary"])
def test_d_ladders_match_oracle(method):
    lad = build_ladder("D", 8, method)
    for n in range(0, 9):
        assert lad[n] == brute_force_eulerian(n, "D")


def test_d_ladders_agree_to_forty():
    a = build_ladder("D", 40, "partition")
    b = build_ladder("D", 40, "theorem")
    c = build_ladder("D", 40, "corollary")
    assert a.rows == b.rows == c.rows
    for n in range(2, 41):
        assert a[n](1) == 2 ** (n - 1) * math.factorial(n)
        assert a[n] == a[n].reverse(n)


@pytest.mark.parametrize("family", ["A", "B"])
def test_ab_ladders(family):
    lad = build_ladder(family, 8)
    for n in range(9):
        assert lad[n] == brute_force_eulerian(n, family)
    assert build_ladder("A", 3).rows == (ONE, ONE, P("1+t"), P("1+4t+t^2"))


def test_ladder_errors():
    with pytest.raises(ValueError):
        build_ladder("D", 5, "guess")
    with pytest.raises(ValueError):
        build_ladder("E", 3)
    with pytest.raises(ValueError):
        build_ladder("D", -1)
