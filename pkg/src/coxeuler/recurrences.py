"""Exact recurrences for Eulerian and sub-Eulerian polynomials.

Type D can be reached two ways:

* through the sub-Eulerian rows (``sub_numbers_step`` / ``sub_polys_step``)
  summed by ``d_poly_via_partition``;
* through the three-term derivative recurrence ``d_poly_via_theorem``, or its
  coefficient form ``d_numbers_via_corollary``, which need no sub-rows.

The last two were published with one wrong term each. They are implemented in
corrected form; ``printed=True`` reproduces the uncorrected term so that its
disagreement with enumeration can be demonstrated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import ONE, Polynomial
from .tables import SubTableRow

__all__ = [
    "BASE_ROW",
    "EulerianLadder",
    "build_ladder",
    "d_numbers_via_corollary",
    "d_poly_via_partition",
    "d_poly_via_theorem",
    "eulerian_step",
    "sub_numbers_step",
    "sub_polys_step",
    "sub_rows",
]


def P(*cs) -> Polynomial:
    return Polynomial(cs)


T = P(0, 1)
ONE_MINUS_T = P(1, -1)
TWO_T_ONE_MINUS_T = P(0, 2, -2)

#: Rank-2 sub-Eulerian row: D_2 = {12, 21, -1-2, -2-1}.
BASE_ROW = SubTableRow(2, P(0, 1), P(0, 0, 1), P(1), P(0, 1))

# Type D ranks 0..2
D_BASE = (ONE, ONE, P(1, 2, 1))


@dataclass(frozen=True)
class EulerianLadder:
    family: str
    rows: tuple[Polynomial, ...]

    def __getitem__(self, n: int) -> Polynomial:
        return self.rows[n]

    def __len__(self):
        return len(self.rows)


def sub_numbers_step(prev: SubTableRow) -> SubTableRow:
    """Rank ``prev.n + 1`` sub-Eulerian numbers, coefficient by coefficient."""
    if prev.n < 2:
        raise ValueError("sub-Eulerian rows start at rank 2")
    n = prev.n + 1
    a1, a01, ag, a0g = (p.coeff for p in prev.polys())
    c1, c01, cg, c0g = [], [], [], []
    for k in range(n + 1):
        c1.append(
            (2 * k - 1) * a1(k) + 2 * (n - k) * a1(k - 1) + a01(k) + ag(k - 1) + a0g(k)
        )
        c01.append(
            2 * (k - 1) * a01(k) + (2 * n - 2 * k + 1) * a01(k - 1)
            + a1(k - 1) + ag(k - 2) + a0g(k - 1)
        )
        cg.append(
            (2 * k + 1) * ag(k) + 2 * (n - k - 1) * ag(k - 1) + a1(k) + a01(k + 1) + a0g(k)
        )
        c0g.append(
            2 * k * a0g(k) + (2 * n - 2 * k - 1) * a0g(k - 1) + a1(k - 1) + a01(k) + ag(k - 1)
        )
    return SubTableRow(n, Polynomial(c1), Polynomial(c01), Polynomial(cg), Polynomial(c0g))


def sub_polys_step(prev: SubTableRow) -> SubTableRow:
    """Rank ``prev.n + 1`` sub-Eulerian polynomials via derivatives."""
    if prev.n < 2:
        raise ValueError("sub-Eulerian rows start at rank 2")
    n = prev.n + 1
    p1, p01, pg, p0g = prev.polys()
    d = TWO_T_ONE_MINUS_T
    q1 = P(-1, 2 * (n - 1)) * p1 + d * p1.derivative() + p01 + T * pg + p0g
    q01 = (
        P(-2, 2 * n - 1) * p01 + d * p01.derivative()
        + T * p1 + pg.shift(2) + T * p0g
    )
    qg = P(1, 2 * (n - 2)) * pg + d * pg.derivative() + p1 + p01.div_t(1) + p0g
    q0g = P(0, 2 * n - 3) * p0g + d * p0g.derivative() + T * p1 + p01 + T * pg
    return SubTableRow(n, q1, q01, qg, q0g)


def sub_rows(max_rank: int, method: str = "polys") -> list[SubTableRow]:
    """Sub-Eulerian rows for ranks ``2..max_rank``."""
    step = {"polys": sub_polys_step, "numbers": sub_numbers_step}[method]
    rows = [BASE_ROW]
    while rows[-1].n < max_rank:
        rows.append(step(rows[-1]))
    return rows


def eulerian_step(family: str, prev: Polynomial, n: int) -> Polynomial:
    """Rank ``n`` Eulerian polynomial of type A or B from rank ``n - 1``."""
    if n < 1:
        raise ValueError("step targets rank >= 1")
    if family == "A":
        return P(1, n - 1) * prev + P(0, 1, -1) * prev.derivative()
    if family == "B":
        return P(1, 2 * n - 1) * prev + TWO_T_ONE_MINUS_T * prev.derivative()
    raise ValueError(f"no first-order step for family {family!r}")


def d_poly_via_partition(row: SubTableRow, form: str = "reduced") -> Polynomial:
    """``D_{n}(t)`` for ``n = row.n + 1`` from the rank ``row.n`` sub-row.

    ``form="reduced"`` uses the version where the two reflection-symmetric
    classes have been merged; ``form="summed"`` is the plain sum of the four
    sub-polynomial steps.
    """
    if row.n < 2:
        raise ValueError("sub-Eulerian rows start at rank 2")
    n = row.n + 1
    d_prev = row.total()
    base = TWO_T_ONE_MINUS_T * d_prev.derivative()
    if form == "reduced":
        tail = ONE_MINUS_T * (row.p01.div_t(1) - T * row.pge2)
        return P(1, 2 * n - 1) * d_prev + base + tail
    if form == "summed":
        return (
            P(0, 2 * n) * d_prev + base
            + row.p01.div_t(1) - T * row.p01
            + ONE_MINUS_T * ONE_MINUS_T * row.pge2
            + P(2, -2) * row.p0ge2
        )
    raise ValueError(f"unknown form {form!r}")


def d_poly_via_theorem(
    d_next: Polynomial, d_cur: Polynomial, d_prev: Polynomial, n: int, printed: bool = False
) -> Polynomial:
    """``D_{n+2}`` from ``D_{n+1}, D_n, D_{n-1}`` (``n >= 1``).

    The cubic-in-``n`` part of the ``D_{n-1}`` coefficient carries a plus
    sign; ``printed=True`` uses a minus sign instead (wrong from rank 5 on).
    """
    if n < 1:
        raise ValueError("recurrence holds for n >= 1")
    t = T
    omt = ONE_MINUS_T
    omt2 = omt * omt
    t2 = t * t
    cubic = 4 * n * (n - 1) * (n - 2) * t2 * P(1, 1)
    if printed:
        cubic = -cubic
    terms = [
        (n * P(1, 5) + 4 * t) * d_next,
        4 * t * omt * d_next.derivative(),
        (omt2 - n * P(1, 3) * P(1, 3) - 4 * n * (n - 1) * t * P(1, 2)) * d_cur,
        -(4 * n * t * omt * P(1, 3) + 4 * t * omt2) * d_cur.derivative(),
        -4 * t2 * omt2 * d_cur.derivative().derivative(),
        (2 * n * (n - 1) * t * P(3, 2, 3) + cubic) * d_prev,
        (2 * n * t * omt2 * P(3, 1) + 8 * n * (n - 1) * t2 * omt * P(1, 1)) * d_prev.derivative(),
        4 * n * t2 * omt2 * P(1, 1) * d_prev.derivative().derivative(),
    ]
    out = terms[0]
    for term in terms[1:]:
        out = out + term
    return out


def d_numbers_via_corollary(
    row_next: Sequence[int],
    row_cur: Sequence[int],
    row_prev: Sequence[int],
    n: int,
    k: int,
    printed: bool = False,
) -> int:
    """``D_{n+2,k}`` from the coefficient rows of ``D_{n+1}, D_n, D_{n-1}``.

    The ``D_{n,k}`` coefficient is ``(1-n) - 4(1+n)k - 4k(k-1)``;
    ``printed=True`` drops the factor ``k`` from the middle term.
    """
    if n < 1:
        raise ValueError("recurrence holds for n >= 1")

    def at(row, j):
        return row[j] if 0 <= j < len(row) else 0

    a, b, c = row_next, row_cur, row_prev
    mid = -4 * (1 + n) if printed else -4 * (1 + n) * k
    return (
        (n + 4 * k) * at(a, k)
        + (5 * n - 4 * k + 8) * at(a, k - 1)
        + ((1 - n) + mid - 4 * k * (k - 1)) * at(b, k)
        + (-2 * (1 + n + 2 * n * n) + 8 * (1 - n) * (k - 1) + 8 * (k - 1) * (k - 2)) * at(b, k - 1)
        + ((1 - n - 8 * n * n) - 4 * (1 - 3 * n) * (k - 2) - 4 * (k - 2) * (k - 3)) * at(b, k - 2)
        + (6 * n * k + 4 * n * k * (k - 1)) * at(c, k)
        + (6 * n * (n - 1) + 2 * n * (4 * n - 9) * (k - 1) - 4 * n * (k - 1) * (k - 2)) * at(c, k - 1)
        + (4 * n * (n - 1) ** 2 + 2 * n * (k - 2) - 4 * n * (k - 2) * (k - 3)) * at(c, k - 2)
        + (2 * n * (1 - 3 * n + 2 * n * n) + 2 * n * (5 - 4 * n) * (k - 3) + 4 * n * (k - 3) * (k - 4))
        * at(c, k - 3)
    )


def build_ladder(family: str, max_rank: int, method: str = "partition", printed: bool = False) -> EulerianLadder:
    """Eulerian polynomials of ranks ``0..max_rank``.

    ``method`` only matters for type D: ``"partition"`` goes through the
    sub-Eulerian rows, ``"theorem"`` through the derivative recurrence and
    ``"corollary"`` through its coefficient form.
    """
    if max_rank < 0:
        raise ValueError("max_rank must be non-negative")
    if family in ("A", "B"):
        rows = [ONE]
        for n in range(1, max_rank + 1):
            rows.append(eulerian_step(family, rows[-1], n))
        return EulerianLadder(family, tuple(rows))
    if family != "D":
        raise ValueError(f"unknown family {family!r}")
    rows = list(D_BASE[: max_rank + 1])
    if method == "partition":
        row = BASE_ROW
        while len(rows) <= max_rank:
            rows.append(d_poly_via_partition(row))
            row = sub_polys_step(row)
    elif method == "theorem":
        while len(rows) <= max_rank:
            n = len(rows) - 2
            rows.append(d_poly_via_theorem(rows[-1], rows[-2], rows[-3], n, printed))
    elif method == "corollary":
        while len(rows) <= max_rank:
            n = len(rows) - 2
            a, b, c = (r.coeffs for r in rows[-1:-4:-1])
            rows.append(
                Polynomial(
                    d_numbers_via_corollary(a, b, c, n, k, printed) for k in range(n + 3)
                )
            )
    else:
        raise ValueError(f"unknown method {method!r}")
    return EulerianLadder("D", tuple(rows))
