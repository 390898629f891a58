"""Generating-function identities checked at finite truncation order.

Closed forms ``S = N / Q`` are checked as ``Q * S == N`` in truncated series,
so no rational functions of ``t`` are ever formed. PDE checks compare only the
slots that survive the ``x``-derivatives involved (see ``TruncatedSeries.valid``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from . import recurrences as rec
from .algebra import ONE, Polynomial, TruncatedSeries, exp_linear
from .tables import (
    DEFAULT_ORACLE_BOUND,
    CheckReport,
    SubTableRow,
    brute_force_eulerian,
    brute_force_sub_row,
)

__all__ = [
    "CLOSED_FORMS",
    "PDES",
    "WORPITZKY",
    "EgfBundle",
    "build_bundle",
    "check_closed_form",
    "check_pde",
    "check_symmetries",
    "check_worpitzky",
    "compare_series",
    "corrupt",
]

CLOSED_FORMS = ("sub1", "sub01", "subge2", "sub0ge2", "D", "A", "B")
PDES = (
    "sub1_flow",
    "sub01_flow",
    "subge2_flow",
    "sub0ge2_flow",
    "A_flow",
    "B_flow",
    "D_second_order",
    "D_flow_once",
    "D_flow_twice",
    "flow_squared_expansion",
)
WORPITZKY = ("sub0ge2", "subge2", "sub01")


def P(*cs) -> Polynomial:
    return Polynomial(cs)


T = P(0, 1)
ONE_MINUS_T = P(1, -1)


@dataclass(frozen=True)
class EgfBundle:
    """Exponential generating functions truncated at ``order``.

    Slot ``n`` of each series holds the rank-``n`` polynomial over ``n!``.
    The four sub-series start at rank 2.
    """

    order: int
    s1: TruncatedSeries
    s01: TruncatedSeries
    sge2: TruncatedSeries
    s0ge2: TruncatedSeries
    sD: TruncatedSeries
    sA: TruncatedSeries
    sB: TruncatedSeries

    def sub(self, stat: str) -> TruncatedSeries:
        return {"sub1": self.s1, "sub01": self.s01, "subge2": self.sge2, "sub0ge2": self.s0ge2}[stat]


def build_bundle(max_rank: int, source: str = "recurrence", oracle_bound: int = DEFAULT_ORACLE_BOUND) -> EgfBundle:
    """Assemble the seven series up to ``x**max_rank``.

    ``source="oracle"`` fills ranks up to ``oracle_bound`` by enumeration and
    the remaining ranks from the recurrences.
    """
    if max_rank < 2:
        raise ValueError("bundle needs max_rank >= 2")
    if source not in ("oracle", "recurrence"):
        raise ValueError(f"unknown source {source!r}")
    limit = oracle_bound if source == "oracle" else 1
    rows = rec.sub_rows(max_rank)
    rows = [brute_force_sub_row(r.n) if r.n <= limit else r for r in rows]
    ladders = {f: rec.build_ladder(f, max_rank) for f in "ABD"}
    fam = {
        f: [brute_force_eulerian(n, f) if n <= limit else ladders[f][n] for n in range(max_rank + 1)]
        for f in "ABD"
    }
    N = max_rank
    return EgfBundle(
        order=N,
        s1=TruncatedSeries.egf([r.p1 for r in rows], N, start=2),
        s01=TruncatedSeries.egf([r.p01 for r in rows], N, start=2),
        sge2=TruncatedSeries.egf([r.pge2 for r in rows], N, start=2),
        s0ge2=TruncatedSeries.egf([r.p0ge2 for r in rows], N, start=2),
        sD=TruncatedSeries.egf(fam["D"], N),
        sA=TruncatedSeries.egf(fam["A"], N),
        sB=TruncatedSeries.egf(fam["B"], N),
    )


def compare_series(lhs: TruncatedSeries, rhs: TruncatedSeries, context: str) -> CheckReport:
    """Slotwise comparison over the slots valid on both sides."""
    top = min(lhs.valid, rhs.valid)
    for n in range(top + 1):
        a, b = lhs[n], rhs[n]
        if a != b:
            k = next(k for k in range(max(len(a), len(b))) if a.coeff(k) != b.coeff(k))
            return CheckReport.fail(context, f"x^{n} t^{k}", b.coeff(k), a.coeff(k))
    return CheckReport.ok(f"{context} [slots 0..{top}]")


def _xt(order: int, **terms: Polynomial) -> TruncatedSeries:
    # series from keyword x-powers: _xt(N, x0=..., x1=...)
    return TruncatedSeries.from_terms(order, {int(k[1:]): v for k, v in terms.items()})


def check_closed_form(kind: str, bundle: EgfBundle) -> CheckReport:
    """Denominator-cleared closed form for one generating function.

    The bundle series is always the left-hand factor, so a failure's
    ``expected`` value comes from the closed-form numerator.
    """
    if bundle.order < 3:
        raise ValueError("closed-form checks need order >= 3")
    N = bundle.order
    E = exp_linear(ONE_MINUS_T, N)
    E2 = exp_linear(2 * ONE_MINUS_T, N)
    one = TruncatedSeries.constant(ONE, N)
    x = _xt(N, x1=ONE)
    q2 = one - E2 * T
    if kind in ("sub1", "sub0ge2"):
        lhs = (q2 * (2 * ONE_MINUS_T)) * bundle.sub(kind)
        rhs = (E - one) * (E - one) * T
    elif kind == "subge2":
        lhs = (q2 * ONE_MINUS_T) * bundle.sge2
        rhs = E - one - x * ONE_MINUS_T
    elif kind == "sub01":
        lhs = (q2 * ONE_MINUS_T) * bundle.s01
        t2 = P(0, 0, 1)
        rhs = E * t2 - (one - x * ONE_MINUS_T) * E2 * t2
    elif kind == "D":
        lhs = q2 * bundle.sD
        rhs = E * ONE_MINUS_T - x * E2 * (T * ONE_MINUS_T)
    elif kind == "A":
        lhs = (one - E * T) * bundle.sA
        rhs = E * ONE_MINUS_T
    elif kind == "B":
        lhs = q2 * bundle.sB
        rhs = E * ONE_MINUS_T
    else:
        raise ValueError(f"unknown closed form {kind!r}")
    return compare_series(lhs, rhs, f"closed form {kind} at order {N}")


def _flow(s: TruncatedSeries, scale: int = 2) -> TruncatedSeries:
    """``scale*t(t-1) d/dt + (1 - scale*x t) d/dx`` applied to ``s``."""
    N = s.order
    st = s.partial_t() * P(0, -scale, scale)
    sx = s.partial_x()
    return st + sx * _xt(N, x0=ONE, x1=P(0, -scale))


def check_pde(kind: str, bundle: EgfBundle) -> CheckReport:
    if bundle.order < 4:
        raise ValueError("PDE checks need order >= 4")
    N = bundle.order
    b = bundle
    x = _xt(N, x1=ONE)
    ctx = f"pde {kind} at order {N}"
    if kind == "sub1_flow":
        lhs = _flow(b.s1)
        rhs = -b.s1 + b.s01 + b.sge2 * T + b.s0ge2 + x * T
    elif kind == "sub01_flow":
        lhs = _flow(b.s01)
        rhs = b.s1 * T + b.s01 * P(-2, 1) + b.sge2 * P(0, 0, 1) + b.s0ge2 * T + x * P(0, 0, 1)
    elif kind == "subge2_flow":
        lhs = _flow(b.sge2)
        rhs = b.s1 + b.s01.div_t(1) + b.sge2 * P(1, -2) + b.s0ge2 + x
    elif kind == "sub0ge2_flow":
        lhs = _flow(b.s0ge2)
        rhs = b.s1 * T + b.s01 + b.sge2 * T - b.s0ge2 * T + x * T
    elif kind == "A_flow":
        lhs = _flow(b.sA, scale=1)
        rhs = b.sA
    elif kind == "B_flow":
        lhs = _flow(b.sB)
        rhs = b.sB * P(1, 1)
    elif kind == "D_second_order":
        D = b.sD
        Dt, Dx = D.partial_t(), D.partial_x()
        g = _xt(N, x0=-ONE, x1=P(1, 1))  # x(1+t) - 1
        omt2 = ONE_MINUS_T * ONE_MINUS_T
        u = _xt(N, x0=ONE, x1=P(0, -2))  # 1 - 2xt
        lhs = (
            Dt.partial_t() * g * (P(0, 0, 4) * omt2)
            - Dx.partial_t() * u * g * (P(0, 4) * ONE_MINUS_T)
            + Dx.partial_x() * u * u * g
            + Dt * _xt(N, x0=P(-2), x1=P(3, 1)) * (P(0, 2) * omt2)
            + Dx * _xt(N, x0=P(0, 4), x1=-P(1, 3) * P(1, 3), x2=P(0, 6, 4, 6))
            + D * omt2
        )
        rhs = TruncatedSeries.zero(N)
    elif kind in ("D_flow_once", "D_flow_twice"):
        E = exp_linear(ONE_MINUS_T, N)
        E2 = exp_linear(2 * ONE_MINUS_T, N)
        q2 = TruncatedSeries.constant(ONE, N) - E2 * T
        if kind == "D_flow_once":
            lhs = q2 * _flow(b.sD)
            rhs = (E * P(1, 1) - E2 * T) * ONE_MINUS_T
        else:
            lhs = q2 * _flow(_flow(b.sD))
            rhs = (E * P(1, 0, 3) - E2 * P(0, 0, 2)) * ONE_MINUS_T
    elif kind == "flow_squared_expansion":
        D = b.sD
        Dt, Dx = D.partial_t(), D.partial_x()
        u = _xt(N, x0=ONE, x1=P(0, -2))
        t_omt = T * ONE_MINUS_T
        lhs = _flow(_flow(D))
        rhs = (
            Dt.partial_t() * (4 * t_omt * t_omt)
            - Dx.partial_t() * u * (4 * t_omt)
            + Dx.partial_x() * u * u
            - Dx * _xt(N, x0=P(0, 2), x1=P(0, -4))
            + Dt * (4 * t_omt * P(1, -2))
        )
    else:
        raise ValueError(f"unknown PDE {kind!r}")
    return compare_series(lhs, rhs, ctx)


def _worpitzky_coefficient(kind: str, n: int, k: int, printed: bool) -> int:
    if kind == "sub0ge2":
        return 2 ** (n - 1) * ((k + 1) ** n + k**n) - (2 * k + 1) ** n
    if kind == "subge2":
        if printed:
            return (2 * k + 1) ** n - (n + 1) * (2 * k) ** n
        return (2 * k + 1) ** n - (2 * k) ** n - n * (2 * k) ** (n - 1)
    if kind == "sub01":
        return (2 * k + 1) ** n - 2**n * (k + 1) ** n + n * 2 ** (n - 1) * (k + 1) ** (n - 1)
    raise ValueError(f"unknown expansion {kind!r}")


_T_POWER = {"sub0ge2": 1, "subge2": 0, "sub01": 2}


def check_worpitzky(
    kind: str, n: int, t_degree: int, printed: bool = False, row: SubTableRow | None = None
) -> CheckReport:
    """Compare ``P_n(t) / (t**s (1-t)**(n-1))`` with its power-sum expansion.

    Both sides are expanded as power series in ``t`` through ``t**t_degree``.
    The rank-``n`` row comes from the recurrences unless ``row`` is given.
    ``printed=True`` selects the uncorrected ``subge2`` coefficient.
    """
    if n < 2:
        raise ValueError("expansions hold for n >= 2")
    if t_degree < n + 2:
        raise ValueError("t_degree must be at least n + 2")
    if row is None:
        row = rec.sub_rows(n)[-1]
    poly = row.get(kind).div_t(_T_POWER[kind])
    # 1/(1-t)^(n-1) = sum_j C(n-2+j, j) t^j
    inv = [math.comb(n - 2 + j, j) for j in range(t_degree + 1)]
    label = "corrected" if kind == "subge2" and not printed else ("as printed" if printed else "")
    ctx = f"power-sum expansion {kind} n={n} {label}".rstrip() + f" to t^{t_degree}"
    for k in range(t_degree + 1):
        have = sum(poly.coeff(i) * inv[k - i] for i in range(min(k, poly.degree) + 1))
        want = _worpitzky_coefficient(kind, n, k, printed)
        if have != want:
            return CheckReport.fail(ctx, f"t^{k}", have, want)
    return CheckReport.ok(ctx)


def check_symmetries(row: SubTableRow) -> CheckReport:
    """Reflection symmetries among the four sub-Eulerian polynomials."""
    if row.n < 2:
        raise ValueError("sub-Eulerian rows start at rank 2")
    n = row.n
    clauses = [
        ("(i) sub1 = sub0ge2", row.p1, row.p0ge2),
        ("(ii) sub01 = reverse(subge2)", row.p01, row.pge2.reverse(n)),
        ("(iii) subge2 = reverse(sub01)", row.pge2, row.p01.reverse(n)),
        ("(iv) sub0ge2 palindromic", row.p0ge2, row.p0ge2.reverse(n)),
        ("(v) sub1 palindromic", row.p1, row.p1.reverse(n)),
    ]
    ctx = f"reflection symmetries n={n}"
    for name, a, b in clauses:
        if a != b:
            return CheckReport.fail(ctx, f"clause {name}", b, a)
    return CheckReport.ok(ctx)


def corrupt(bundle: EgfBundle, name: str, slot: int, delta=1) -> EgfBundle:
    """Copy of ``bundle`` with ``delta`` added to one slot (for self-tests)."""
    s = getattr(bundle, name)
    return replace(bundle, **{name: s.with_slot(slot, s[slot] + Fraction(delta))})
