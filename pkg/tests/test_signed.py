import itertools

import pytest

from coxeuler.signed import (
    DescentClass,
    SignedPermutation,
    class_from_descents,
    descent_class,
    descent_set,
    elements,
    expected_insertion,
    family_size,
    hat,
    insert_letter,
    is_even_signed,
)

import naive

S = SignedPermutation


def test_window_validation():
    assert S((2, -1)).rank == 2
    for bad in [(1, 1), (0, 1), (1, 3), (-2, 2)]:
        with pytest.raises(ValueError):
            S(bad)


@pytest.mark.parametrize(
    "w,conv,want",
    [((1, 2, 3), "D", set()), ((-1, -2, 3), "D", {0, 1}), ((2, 1, 3), "D", {1}), ((-1, 2), "B", {0}),
     ((3, 1, 2), "A", {1})],
)
def test_descent_set_examples(w, conv, want):
    assert descent_set(S(w), conv) == want


def test_d_descent_needs_rank_two():
    with pytest.raises(ValueError):
        descent_set(S((1,)), "D")


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("conv", ["A", "B", "D"])
def test_descent_set_matches_naive(n, conv):
    for w in naive.signed_perms(n, "B"):
        assert descent_set(S(w), conv) == naive.descents(w, "A" if conv == "A" else conv)


def test_even_signed():
    assert is_even_signed(S((1, 2, 3)))
    assert not is_even_signed(S((-1, 2, 3)))
    assert is_even_signed(S((-1, -2, 3)))


def test_hat():
    assert hat(S((2, 1, 3))) == S((-2, 1, 3))
    assert hat(hat(S((2, -1, 3)))) == S((2, -1, 3))
    assert hat(S((1, 2))) == S((-1, 2))
    assert not is_even_signed(hat(S((1, 2))))


def test_descent_classes_rank_two():
    assert descent_class(S((2, 1))) is DescentClass.C1
    assert descent_class(S((-1, -2))) is DescentClass.C01
    assert descent_class(S((1, 2))) is DescentClass.CGE2
    assert descent_class(S((-2, -1))) is DescentClass.C0GE2


def test_hat_image_table():
    assert DescentClass.C1.hat_image() is DescentClass.C0GE2
    assert DescentClass.C0GE2.hat_image() is DescentClass.C1
    assert DescentClass.C01.hat_image() is DescentClass.C01
    assert DescentClass.CGE2.hat_image() is DescentClass.CGE2
    assert class_from_descents({0, 1, 4}) is DescentClass.C01


def test_elements_rank_two_d():
    got = list(elements(2, "D"))
    assert set(got) == {S((1, 2)), S((2, 1)), S((-1, -2)), S((-2, -1))}
    # permutation-lexicographic, then sign mask counted upward
    assert got == [S((1, 2)), S((-1, -2)), S((2, 1)), S((-2, -1))]


@pytest.mark.parametrize("family", ["A", "B", "D", "B_minus_D"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_elements_complete_and_distinct(n, family):
    got = list(elements(n, family))
    assert len(got) == len(set(got)) == family_size(n, family)
    ref = "B" if family == "B_minus_D" else family
    want = set(naive.signed_perms(n, ref))
    if family == "B_minus_D":
        want -= set(naive.signed_perms(n, "D"))
    assert set(got) == want


def test_family_sizes():
    assert family_size(3, "D") == 24
    assert family_size(1, "A") == 1
    assert family_size(7, "D") == 322560
    assert len(list(elements(3, "D"))) == 24


def test_elements_rejects_bad_input():
    with pytest.raises(ValueError):
        list(elements(2, "E"))
    with pytest.raises(ValueError):
        list(elements(0, "D"))


def test_insert_letter_examples():
    assert insert_letter(S((2, 1)), 0, 1) == S((3, 2, 1))
    assert insert_letter(S((2, 1)), 2, -1) == S((-2, 1, -3))
    assert insert_letter(S((1, 2)), 1, 1) == S((1, 3, 2))
    with pytest.raises(ValueError):
        insert_letter(S((1, 2)), 3, 1)
    with pytest.raises(ValueError):
        insert_letter(S((1, 2)), 0, 2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_insertion_rules_predict_products(n):
    # rule table against direct evaluation, independently of the scan kernels
    seen_transitions = set()
    for w in elements(n - 1, "D"):
        dw = descent_set(w, "D")
        cw = class_from_descents(dw)
        for pos, sign in itertools.product(range(n), (1, -1)):
            u = insert_letter(w, pos, sign)
            du = naive.descents(tuple(u), "D")
            cls, dk = expected_insertion(cw, dw, n, pos, sign)
            assert descent_class(u) is cls
            assert len(du) == len(dw) + dk
            seen_transitions.add(dk)
    assert seen_transitions == {-1, 0, 1, 2}
