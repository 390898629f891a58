"""Brute-force oracle: Eulerian and sub-Eulerian polynomials by enumeration.

Everything here is computed by walking every element of the group, so it is
slow but obviously right. The recurrences are checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .algebra import ONE, Polynomial
from .signed import ENUMERATION_LIMIT, DescentClass, SignedPermutation

__all__ = [
    "DEFAULT_ORACLE_BOUND",
    "REFERENCE_ROWS",
    "CheckReport",
    "Failure",
    "OutOfRangeError",
    "STATS",
    "SubTableRow",
    "brute_force_eulerian",
    "brute_force_sub_row",
    "verify_hat_lemma",
    "verify_insertion",
]

DEFAULT_ORACLE_BOUND = 8

#: Statistic names in table order.
STATS = ("sub1", "sub01", "subge2", "sub0ge2")


class OutOfRangeError(ValueError):
    """A rank outside the range an operation supports."""


@dataclass(frozen=True)
class SubTableRow:
    """The four sub-Eulerian polynomials of rank ``n``."""

    n: int
    p1: Polynomial
    p01: Polynomial
    pge2: Polynomial
    p0ge2: Polynomial

    def total(self) -> Polynomial:
        return self.p1 + self.p01 + self.pge2 + self.p0ge2

    def get(self, stat: str | DescentClass) -> Polynomial:
        if isinstance(stat, DescentClass):
            stat = stat.value
        try:
            return getattr(self, _FIELD[stat])
        except KeyError:
            raise ValueError(f"unknown statistic {stat!r}") from None

    def polys(self) -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
        return (self.p1, self.p01, self.pge2, self.p0ge2)


_FIELD = dict(zip(STATS, ("p1", "p01", "pge2", "p0ge2")))


@dataclass(frozen=True)
class Failure:
    location: str
    expected: str
    actual: str


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    context: str
    first_failure: Failure | None = None

    def __post_init__(self):
        if self.passed != (self.first_failure is None):
            raise ValueError("a report passes exactly when it has no failure")

    @classmethod
    def ok(cls, context: str) -> "CheckReport":
        return cls(True, context)

    @classmethod
    def fail(cls, context: str, location: str, expected, actual) -> "CheckReport":
        return cls(False, context, Failure(location, str(expected), str(actual)))

    def to_dict(self) -> dict:
        ff = None
        if self.first_failure is not None:
            ff = {
                "location": self.first_failure.location,
                "expected": self.first_failure.expected,
                "actual": self.first_failure.actual,
            }
        return {"context": self.context, "passed": self.passed, "first_failure": ff}


def _check_rank(n: int, lo: int, hi: int = ENUMERATION_LIMIT):
    if not lo <= n <= hi:
        raise OutOfRangeError(f"rank {n} outside {lo}..{hi}")


def brute_force_sub_row(n: int, backend: str | None = None) -> SubTableRow:
    _check_rank(n, 2)
    counts = kernels.sub_census(n, backend)
    return SubTableRow(n, *(Polynomial(c) for c in counts))


def brute_force_eulerian(n: int, family: str, backend: str | None = None) -> Polynomial:
    """``sum t**des(w)`` over ``S_n``, ``B_n`` or ``D_n``.

    Type D uses the constant 1 at ranks 0 and 1.
    """
    if family not in ("A", "B", "D"):
        raise ValueError(f"unknown family {family!r}")
    _check_rank(n, 0)
    if n == 0 or (family == "D" and n == 1):
        return ONE
    return Polynomial(kernels.eulerian_census(n, family, backend))


def verify_hat_lemma(n: int, backend: str | None = None) -> CheckReport:
    _check_rank(n, 2)
    context = f"hat map on D_{n}: descent count kept, classes swapped 1<->0,>=2"
    bad = kernels.hat_scan(n, backend)
    if bad is None:
        return CheckReport.ok(context)
    word, reason = bad
    return CheckReport.fail(context, f"word {word}", "correspondence", reason)


def verify_insertion(
    n: int,
    sources: Iterable[SignedPermutation] | None = None,
    backend: str | None = None,
) -> CheckReport:
    """Check that inserting ``+-n`` into ``D_{n-1}`` builds ``D_n`` bijectively.

    Every product's (class, descent count) is compared against the rule table
    in ``signed.expected_insertion``. ``sources`` replaces ``D_{n-1}``.
    """
    _check_rank(n, 3)
    count, bad = kernels.insertion_scan(n, sources, backend)
    context = f"insertion D_{n - 1} -> D_{n}: {count} products"
    if bad is None:
        return CheckReport.ok(context)
    if bad["word"] is None:
        location = "product count"
    else:
        location = (
            f"word {bad['word']} from {bad['source']} "
            f"position {bad['position']} sign {'+' if bad['sign'] > 0 else '-'}: {bad['reason']}"
        )
    return CheckReport.fail(context, location, bad["expected"], bad["actual"])


# Published sub-Eulerian rows for n = 2..6, keyed by statistic.
REFERENCE_ROWS: dict[str, dict[int, str]] = {
    "sub1": {
        2: "t",
        3: "3t+3t^2",
        4: "7t+34t^2+7t^3",
        5: "15t+225t^2+225t^3+15t^4",
        6: "31t+1196t^2+3306t^3+1196t^4+31t^5",
    },
    "sub01": {
        2: "t^2",
        3: "5t^2+t^3",
        4: "17t^2+30t^3+t^4",
        5: "49t^2+303t^3+127t^4+t^5",
        6: "129t^2+2132t^3+3030t^4+468t^5+t^6",
    },
    "subge2": {
        2: "1",
        3: "1+5t",
        4: "1+30t+17t^2",
        5: "1+127t+303t^2+49t^3",
        6: "1+468t+3030t^2+2132t^3+129t^4",
    },
    "sub0ge2": {
        2: "t",
        3: "3t+3t^2",
        4: "7t+34t^2+7t^3",
        5: "15t+225t^2+225t^3+15t^4",
        6: "31t+1196t^2+3306t^3+1196t^4+31t^5",
    },
}


def reference_row(n: int) -> SubTableRow:
    if n not in REFERENCE_ROWS["sub1"]:
        raise OutOfRangeError(f"no published row for n={n}")
    return SubTableRow(n, *(Polynomial.parse(REFERENCE_ROWS[s][n]) for s in STATS))
