import pytest

from coxeuler.algebra import Polynomial
from coxeuler.identities import (
    CLOSED_FORMS,
    PDES,
    WORPITZKY,
    build_bundle,
    check_closed_form,
    check_pde,
    check_symmetries,
    check_worpitzky,
    corrupt,
)
from coxeuler.recurrences import sub_rows
from coxeuler.tables import SubTableRow, brute_force_sub_row


@pytest.fixture(scope="module")
def oracle6():
    return build_bundle(6, "oracle")


@pytest.fixture(scope="module")
def bundle8():
    return build_bundle(8, "recurrence")


def test_bundle_sources_agree():
    assert build_bundle(7, "oracle") == build_bundle(7, "recurrence")
    with pytest.raises(ValueError):
        build_bundle(1)
    with pytest.raises(ValueError):
        build_bundle(4, "guess")


@pytest.mark.parametrize("kind", CLOSED_FORMS)
def test_closed_forms(kind, oracle6):
    assert check_closed_form(kind, oracle6).passed


def test_closed_form_detects_corruption(oracle6):
    r = check_closed_form("D", corrupt(oracle6, "sD", 4))
    assert not r.passed
    assert r.first_failure.location.startswith("x^4")


@pytest.mark.parametrize("name", ["s1", "s01", "sge2", "s0ge2", "sA", "sB"])
def test_each_closed_form_sees_its_series(name, oracle6):
    kind = {"s1": "sub1", "s01": "sub01", "sge2": "subge2", "s0ge2": "sub0ge2", "sA": "A", "sB": "B"}[name]
    assert not check_closed_form(kind, corrupt(oracle6, name, 3)).passed


@pytest.mark.parametrize("kind", PDES)
def test_pdes(kind, bundle8):
    assert check_pde(kind, bundle8).passed


@pytest.mark.parametrize("kind,name", [("A_flow", "sA"), ("sub0ge2_flow", "s0ge2"), ("D_second_order", "sD")])
def test_pde_detects_corruption(kind, name, bundle8):
    assert not check_pde(kind, corrupt(bundle8, name, 5)).passed


def test_unknown_kinds(oracle6):
    with pytest.raises(ValueError):
        check_closed_form("E", oracle6)
    with pytest.raises(ValueError):
        check_pde("heat", build_bundle(6))


def test_worpitzky_examples():
    r = check_worpitzky("subge2", 2, 8)
    assert r.passed
    bad = check_worpitzky("subge2", 2, 8, printed=True)
    assert not bad.passed
    assert (bad.first_failure.location, bad.first_failure.actual, bad.first_failure.expected) == ("t^1", "-3", "1")
    assert check_worpitzky("sub01", 3, 10, row=brute_force_sub_row(3)).passed


@pytest.mark.parametrize("kind", WORPITZKY)
def test_worpitzky_range(kind):
    rows = {r.n: r for r in sub_rows(10)}
    for n in range(2, 11):
        assert check_worpitzky(kind, n, 24, row=rows[n]).passed
        if kind == "subge2":
            assert check_worpitzky(kind, n, 24, printed=True, row=rows[n]).first_failure.location == "t^1"


def test_worpitzky_preconditions():
    with pytest.raises(ValueError):
        check_worpitzky("subge2", 1, 8)
    with pytest.raises(ValueError):
        check_worpitzky("subge2", 6, 5)


def test_symmetries():
    assert check_symmetries(brute_force_sub_row(4)).passed
    assert check_symmetries(brute_force_sub_row(2)).passed
    r = brute_force_sub_row(4)
    bad = SubTableRow(4, r.p1 + 1, r.p01, r.pge2, r.p0ge2)
    rep = check_symmetries(bad)
    assert not rep.passed and "(i)" in rep.first_failure.location
    for row in sub_rows(40):
        assert check_symmetries(row).passed
