"""Signed permutations, descent statistics and the letter-insertion construction.

A signed permutation of rank ``n`` is written in window notation as a tuple of
nonzero integers whose absolute values are ``1..n``. Three descent conventions
are supported:

* ``"A"``: positions ``i`` in ``[1, n-1]`` with ``w[i] > w[i+1]`` (1-based);
* ``"B"``: as A, plus position 0 when ``w[1] < 0`` (virtual ``w[0] = 0``);
* ``"D"``: positions ``i`` in ``[0, n-1]`` with virtual ``w[0] = -w[2]``.
"""

from __future__ import annotations

import enum
import itertools
from typing import Iterable, Iterator

__all__ = [
    "ENUMERATION_LIMIT",
    "DescentClass",
    "SignedPermutation",
    "class_from_descents",
    "descent_class",
    "descent_set",
    "elements",
    "expected_insertion",
    "family_size",
    "hat",
    "insert_letter",
    "is_even_signed",
]

#: Largest rank any exhaustive enumeration accepts.
ENUMERATION_LIMIT = 10

FAMILIES = ("A", "B", "D", "B_minus_D")


class SignedPermutation(tuple):
    """Window notation ``(w_1, ..., w_n)`` of an element of ``B_n``."""

    __slots__ = ()

    def __new__(cls, window: Iterable[int]):
        w = tuple(window)
        if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a signed permutation")
        return tuple.__new__(cls, w)

    @classmethod
    def _unchecked(cls, w) -> "SignedPermutation":
        return tuple.__new__(cls, w)

    @property
    def window(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def rank(self) -> int:
        return len(self)

    def __repr__(self):
        return f"SignedPermutation({tuple(self)})"


class DescentClass(enum.Enum):
    """Which of the positions 0 and 1 are D-descents.

    Values double as the statistic names used by tables and the CLI.
    """

    C1 = "sub1"  # descent at 1, not at 0
    C01 = "sub01"  # descents at 0 and 1
    CGE2 = "subge2"  # neither
    C0GE2 = "sub0ge2"  # descent at 0, not at 1

    @property
    def index(self) -> int:
        return _CLASS_ORDER.index(self)

    def hat_image(self) -> "DescentClass":
        """Class of ``hat(w)`` given the class of ``w``."""
        return _HAT_IMAGE[self]


_CLASS_ORDER = (DescentClass.C1, DescentClass.C01, DescentClass.CGE2, DescentClass.C0GE2)
_HAT_IMAGE = {
    DescentClass.C1: DescentClass.C0GE2,
    DescentClass.C0GE2: DescentClass.C1,
    DescentClass.C01: DescentClass.C01,
    DescentClass.CGE2: DescentClass.CGE2,
}


def class_from_descents(des) -> DescentClass:
    d0, d1 = 0 in des, 1 in des
    if d1:
        return DescentClass.C01 if d0 else DescentClass.C1
    return DescentClass.C0GE2 if d0 else DescentClass.CGE2


def descent_set(w: Iterable[int], convention: str = "D") -> frozenset[int]:
    w = tuple(w)
    n = len(w)
    out = {i for i in range(1, n) if w[i - 1] > w[i]}
    if convention == "A":
        pass
    elif convention == "B":
        if n and w[0] < 0:
            out.add(0)
    elif convention == "D":
        if n < 2:
            raise ValueError("D-descents need rank >= 2")
        if -w[1] > w[0]:
            out.add(0)
    else:
        raise ValueError(f"unknown descent convention {convention!r}")
    return frozenset(out)


def is_even_signed(w: Iterable[int]) -> bool:
    return sum(1 for x in w if x < 0) % 2 == 0


def hat(w: SignedPermutation) -> SignedPermutation:
    """Negate the first letter. Swaps ``D_n`` with its complement in ``B_n``."""
    if len(w) < 1:
        raise ValueError("hat needs rank >= 1")
    return SignedPermutation._unchecked((-w[0],) + tuple(w[1:]))


def descent_class(w: SignedPermutation) -> DescentClass:
    if len(w) < 2:
        raise ValueError("descent classes need rank >= 2")
    return class_from_descents(descent_set(w, "D"))


def family_size(n: int, family: str) -> int:
    from math import factorial

    sizes = {
        "A": factorial(n),
        "B": 2**n * factorial(n),
        "D": 2 ** (n - 1) * factorial(n),
        "B_minus_D": 2 ** (n - 1) * factorial(n),
    }
    return sizes[family]


def _sign_masks(n: int, family: str) -> list[int]:
    if family == "A":
        return [0]
    masks = range(2**n)
    if family == "B":
        return list(masks)
    parity = 0 if family == "D" else 1
    return [m for m in masks if bin(m).count("1") % 2 == parity]


def elements(n: int, family: str) -> Iterator[SignedPermutation]:
    """Every element of the family, each exactly once.

    Order: absolute values run through permutations of ``1..n`` in
    lexicographic order; for each, sign masks count upward in binary with bit
    ``i`` negating window entry ``i`` (0-based).
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise ValueError(f"rank {n} outside supported range 1..{ENUMERATION_LIMIT}")
    masks = _sign_masks(n, family)
    signs = [tuple(-1 if m >> i & 1 else 1 for i in range(n)) for m in masks]
    mk = SignedPermutation._unchecked
    for perm in itertools.permutations(range(1, n + 1)):
        for s in signs:
            yield mk(tuple(p * e for p, e in zip(perm, s)))


def insert_letter(w: SignedPermutation, position: int, sign: int) -> SignedPermutation:
    """Insert ``n`` into ``w`` (sign +1) or ``-n`` into ``hat(w)`` (sign -1).

    ``w`` has ``n - 1`` letters; ``position`` counts how many letters precede
    the new one, so 0 is the front and ``n - 1`` the back.
    """
    n = len(w) + 1
    if not 0 <= position <= n - 1:
        raise ValueError(f"position {position} outside 0..{n - 1}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    base = tuple(w) if sign == 1 else tuple(hat(w))
    return SignedPermutation._unchecked(base[:position] + (sign * n,) + base[position:])


# (class of the source, sign) -> (class of the product, change in descents)
_FRONT_RULES = {
    (DescentClass.C1, 1): (DescentClass.C1, 1),
    (DescentClass.C1, -1): (DescentClass.C0GE2, 0),
    (DescentClass.C01, 1): (DescentClass.C1, 0),
    (DescentClass.C01, -1): (DescentClass.C0GE2, 0),
    (DescentClass.CGE2, 1): (DescentClass.C1, 1),
    (DescentClass.CGE2, -1): (DescentClass.C0GE2, 1),
    (DescentClass.C0GE2, 1): (DescentClass.C1, 0),
    (DescentClass.C0GE2, -1): (DescentClass.C0GE2, 1),
}
_SECOND_RULES = {
    (DescentClass.C1, 1): (DescentClass.CGE2, 0),
    (DescentClass.C1, -1): (DescentClass.C01, 1),
    (DescentClass.C01, 1): (DescentClass.CGE2, -1),
    (DescentClass.C01, -1): (DescentClass.C01, 0),
    (DescentClass.CGE2, 1): (DescentClass.CGE2, 1),
    (DescentClass.CGE2, -1): (DescentClass.C01, 2),
    (DescentClass.C0GE2, 1): (DescentClass.CGE2, 0),
    (DescentClass.C0GE2, -1): (DescentClass.C01, 1),
}


def expected_insertion(
    cls: DescentClass, des: frozenset[int], n: int, position: int, sign: int
) -> tuple[DescentClass, int]:
    """Predicted (class, descent change) of ``insert_letter(w, position, sign)``.

    ``cls`` and ``des`` describe the source ``w`` of rank ``n - 1 >= 2``.
    """
    if position == 0:
        return _FRONT_RULES[cls, sign]
    if position == 1:
        return _SECOND_RULES[cls, sign]
    target = cls if sign == 1 else cls.hat_image()
    if position == n - 1:
        return target, 0 if sign == 1 else 1
    return target, 0 if position in des else 1


def rule_arrays() -> tuple[list[int], list[int]]:
    """Front/second-position rules flattened for the compiled kernel.

    Index ``(pos * 2 + (sign < 0)) * 4 + class_index``.
    """
    classes, deltas = [], []
    for rules in (_FRONT_RULES, _SECOND_RULES):
        for sign in (1, -1):
            for c in _CLASS_ORDER:
                tc, dk = rules[c, sign]
                classes.append(tc.index)
                deltas.append(dk)
    return classes, deltas
