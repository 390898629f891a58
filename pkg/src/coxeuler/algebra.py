"""Exact polynomial and truncated power-series arithmetic.

Coefficients are Python ``int`` when integral and :class:`fractions.Fraction`
otherwise, so every operation is exact. Two value types live here:

``Polynomial``
    dense univariate polynomial in ``t``.
``TruncatedSeries``
    series in ``x`` cut off at a fixed order, with ``Polynomial`` coefficients.
    Slot ``n`` stores the plain coefficient of ``x**n``; exponential generating
    functions therefore keep their ``1/n!`` inside the slot.

Real-root counting (Sturm chains, plus a Descartes bisection counter used as an
independent cross-check) is at the bottom of the module.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

__all__ = [
    "InexactDivisionError",
    "Polynomial",
    "SturmResult",
    "TruncatedSeries",
    "bisection_real_root_count",
    "exp_linear",
    "poly_derivative",
    "poly_divmod",
    "poly_exact_div_t",
    "poly_gcd",
    "poly_reverse",
    "series_partial",
    "series_product",
    "squarefree_part",
    "sturm_chain",
    "sturm_real_root_count",
]


class InexactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def _norm(c) -> Scalar:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not exact")
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(t(?:\^(\d+))?)?")


class Polynomial:
    """Dense polynomial in ``t`` with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of ``t**k``. Trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()`` and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Scalar, ...] = tuple(cs)

    @classmethod
    def _raw(cls, cs: list) -> "Polynomial":
        # cs must already be normalised; only trailing zeros are stripped
        while cs and cs[-1] == 0:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse strings such as ``"7t+34t^2+7t^3"`` or ``"1 - 2t"``."""
        s = text.replace(" ", "").replace("−", "-")
        if not s:
            raise ValueError("empty polynomial text")
        out: dict[int, Scalar] = {}
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
            sign = -1 if m.group(1) == "-" else 1
            if pos > 0 and not m.group(1):
                raise ValueError(f"missing operator in {text!r} at {pos}")
            c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            k = 0
            if m.group(3):
                k = int(m.group(4)) if m.group(4) else 1
            out[k] = out.get(k, 0) + sign * c
            pos = m.end()
        deg = max(out)
        return cls([out.get(k, 0) for k in range(deg + 1)])

    # -- basic properties ------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    @property
    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc) if isinstance(acc, (int, Fraction)) else acc

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = _norm(cs[i] + c)
        return Polynomial._raw(cs)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return ZERO
            return Polynomial._raw([_norm(c * other) for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial._raw([_norm(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            body = str(mag) if (mag != 1 or k == 0) else ""
            parts.append((sign, body + mono))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            s += sign + term
        return s

    # -- calculus and reshaping ------------------------------------------
    def derivative(self) -> "Polynomial":
        return Polynomial._raw([_norm(k * c) for k, c in enumerate(self.coeffs)][1:])

    def shift(self, a: int) -> "Polynomial":
        """Multiply by ``t**a``."""
        if a < 0:
            raise ValueError("use div_t for negative shifts")
        if not self.coeffs:
            return ZERO
        return Polynomial._raw([0] * a + list(self.coeffs))

    def div_t(self, a: int = 1) -> "Polynomial":
        """Exact division by ``t**a``."""
        if a < 0:
            raise ValueError("negative power")
        low = self.coeffs[:a]
        if any(c != 0 for c in low):
            raise InexactDivisionError(
                f"{self} is not divisible by t^{a}"
            )
        return Polynomial._raw(list(self.coeffs[a:]))

    def reverse(self, n: int) -> "Polynomial":
        """Return ``t**n * p(1/t)``; requires ``n >= degree``."""
        if n < self.degree:
            raise ValueError(f"reverse width {n} below degree {self.degree}")
        cs = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return Polynomial._raw(cs[::-1])

    def compose_linear(self, a: Scalar, b: Scalar) -> "Polynomial":
        """Return ``p(a + b*t)``."""
        result = ZERO
        lin = Polynomial((a, b))
        for c in reversed(self.coeffs):
            result = result * lin + c
        return result

    def monic(self) -> "Polynomial":
        lc = self.leading
        return Polynomial._raw([_norm(Fraction(c) / lc) for c in self.coeffs])


ZERO = Polynomial()
ONE = Polynomial((1,))
T = Polynomial((0, 1))


def poly_derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def poly_reverse(p: Polynomial, n: int) -> Polynomial:
    return p.reverse(n)


def poly_exact_div_t(p: Polynomial, a: int) -> Polynomial:
    return p.div_t(a)


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division over the rationals."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a.coeffs]
    db, lb = b.degree, Fraction(b.leading)
    if len(rem) - 1 < db:
        return ZERO, a
    quot = [Fraction(0)] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lb
        if c == 0:
            continue
        quot[i - db] = c
        for j, bj in enumerate(b.coeffs):
            rem[i - db + j] -= c * bj
    return Polynomial(quot), Polynomial(rem[:db])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic() if not a.is_zero() else ZERO


def squarefree_part(p: Polynomial) -> Polynomial:
    """``p / gcd(p, p')``: same roots, each simple."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    if p.degree == 0:
        return p
    q, r = poly_divmod(p, poly_gcd(p, p.derivative()))
    assert r.is_zero()
    return q


# ---------------------------------------------------------------------------
# truncated series in x
# ---------------------------------------------------------------------------

PolyLike = Union[Polynomial, int, Fraction]


def _as_poly(c: PolyLike) -> Polynomial:
    return c if isinstance(c, Polynomial) else Polynomial((c,))


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum_{n<=order} coeffs[n] * x**n`` with polynomial-in-``t`` slots.

    ``valid`` is the highest slot whose value is trustworthy. It starts at
    ``order`` and drops by one for every ``x``-derivative; products and sums
    keep the minimum of their operands.
    """

    order: int
    coeffs: tuple[Polynomial, ...]
    valid: int | None = None

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        cs = tuple(_as_poly(c) for c in self.coeffs)
        if len(cs) > self.order + 1:
            raise ValueError("more slots than order + 1")
        cs = cs + (ZERO,) * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", cs)
        if self.valid is None:
            object.__setattr__(self, "valid", self.order)
        elif not -1 <= self.valid <= self.order:
            raise ValueError("valid slot index out of range")

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, ())

    @classmethod
    def constant(cls, c: PolyLike, order: int) -> "TruncatedSeries":
        return cls(order, (_as_poly(c),))

    @classmethod
    def from_terms(cls, order: int, terms: dict[int, PolyLike]) -> "TruncatedSeries":
        """Series from ``{x-power: coefficient}`` (powers above order dropped)."""
        cs = [ZERO] * (order + 1)
        for k, c in terms.items():
            if k <= order:
                cs[k] = cs[k] + _as_poly(c)
        return cls(order, tuple(cs))

    @classmethod
    def egf(cls, polys: Sequence[Polynomial], order: int, start: int = 0) -> "TruncatedSeries":
        """Slot ``n`` gets ``polys[n - start] / n!`` for ``start <= n <= order``."""
        cs = [ZERO] * (order + 1)
        for n in range(start, order + 1):
            cs[n] = polys[n - start] * Fraction(1, math.factorial(n))
        return cls(order, tuple(cs))

    # -- helpers ----------------------------------------------------------
    def __getitem__(self, n: int) -> Polynomial:
        return self.coeffs[n]

    def with_slot(self, n: int, value: PolyLike) -> "TruncatedSeries":
        cs = list(self.coeffs)
        cs[n] = _as_poly(value)
        return TruncatedSeries(self.order, tuple(cs), self.valid)

    def _check(self, other: "TruncatedSeries"):
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            other = TruncatedSeries.constant(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        cs = tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        return TruncatedSeries(self.order, cs, min(self.valid, other.valid))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs), self.valid)

    def __sub__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            other = TruncatedSeries.constant(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            return TruncatedSeries(
                self.order, tuple(c * other for c in self.coeffs), self.valid
            )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_product(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = TruncatedSeries.constant(ONE, self.order)
        for _ in range(e):
            result = result * self
        return result

    def mul_x(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``x**k``; the top ``k`` slots fall off."""
        cs = (ZERO,) * k + self.coeffs[: self.order + 1 - k]
        return TruncatedSeries(self.order, cs, min(self.order, self.valid + k))

    def partial_t(self) -> "TruncatedSeries":
        return series_partial(self, "t")

    def partial_x(self) -> "TruncatedSeries":
        return series_partial(self, "x")

    def div_t(self, a: int = 1) -> "TruncatedSeries":
        return TruncatedSeries(
            self.order, tuple(c.div_t(a) for c in self.coeffs), self.valid
        )

    def map(self, f) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(f(c) for c in self.coeffs), self.valid)


def series_product(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    s1._check(s2)
    N = s1.order
    a, b = s1.coeffs, s2.coeffs
    nz_a = [i for i in range(N + 1) if not a[i].is_zero()]
    nz_b = [j for j in range(N + 1) if not b[j].is_zero()]
    out = [ZERO] * (N + 1)
    for i in nz_a:
        for j in nz_b:
            if i + j > N:
                break
            out[i + j] = out[i + j] + a[i] * b[j]
    return TruncatedSeries(N, tuple(out), min(s1.valid, s2.valid))


def series_partial(s: TruncatedSeries, axis: str) -> TruncatedSeries:
    """Partial derivative along ``"t"`` or ``"x"``.

    Along ``x`` the slots shift down, the top slot becomes zero and ``valid``
    drops by one.
    """
    if axis == "t":
        return TruncatedSeries(s.order, tuple(c.derivative() for c in s.coeffs), s.valid)
    if axis == "x":
        cs = tuple(s.coeffs[n + 1] * (n + 1) for n in range(s.order)) + (ZERO,)
        return TruncatedSeries(s.order, cs, max(-1, min(s.valid, s.order) - 1))
    raise ValueError(f"unknown axis {axis!r}")


def exp_linear(u: PolyLike, order: int) -> TruncatedSeries:
    """Truncation of ``exp(x * u(t))``: slot ``n`` holds ``u**n / n!``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    u = _as_poly(u)
    cs = [ONE]
    power = ONE
    for n in range(1, order + 1):
        power = power * u
        cs.append(power * Fraction(1, math.factorial(n)))
    return TruncatedSeries(order, tuple(cs))


# ---------------------------------------------------------------------------
# real roots
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SturmResult:
    distinct_real_roots: int
    degree_of_squarefree_part: int
    all_real: bool = field(init=False)

    def __post_init__(self):
        if not 0 <= self.distinct_real_roots <= self.degree_of_squarefree_part:
            raise ValueError("root count outside [0, squarefree degree]")
        object.__setattr__(
            self, "all_real", self.distinct_real_roots == self.degree_of_squarefree_part
        )


def sturm_chain(p: Polynomial) -> list[Polynomial]:
    """Signed remainder sequence ``p, p', -rem(p, p'), ...``."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-poly_divmod(chain[-2], chain[-1])[1])
    return chain[:-1]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    v, prev = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def sturm_real_root_count(p: Polynomial) -> SturmResult:
    """Count distinct real roots of ``p`` from the Sturm chain of its square-free part.

    Signs at infinity come from leading coefficients and degrees only.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    sf = squarefree_part(p)
    chain = sturm_chain(sf)
    at_pos = [_sign(q.leading) for q in chain]
    at_neg = [_sign(q.leading) * (-1) ** q.degree for q in chain]
    return SturmResult(_variations(at_neg) - _variations(at_pos), sf.degree)


def _mobius_variations(p: Polynomial, a: Fraction, b: Fraction) -> int:
    # sign variations of (1+y)^d p((a + b y)/(1+y)); bounds the roots in (a, b)
    r = p.compose_linear(a, b - a)
    d = r.degree
    q = ZERO
    one_plus_y = Polynomial((1, 1))
    for i, c in enumerate(r.coeffs):
        if c != 0:
            q = q + (one_plus_y ** (d - i)).shift(i) * c
    return _variations(_sign(c) for c in q.coeffs)


def bisection_real_root_count(p: Polynomial) -> int:
    """Distinct real roots by interval bisection on ``(-M, M)``.

    ``M = 1 + max |c_i / c_lead|`` bounds every root. Intervals are halved
    until Descartes' sign-variation bound on each is 0 or 1; a midpoint that is
    itself a root is counted directly.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    sf = squarefree_part(p)
    if sf.degree == 0:
        return 0
    lead = Fraction(sf.leading)
    M = 1 + max(abs(Fraction(c) / lead) for c in sf.coeffs[:-1])
    count = 0
    stack = [(-M, M)]
    while stack:
        a, b = stack.pop()
        v = _mobius_variations(sf, a, b)
        if v == 0:
            continue
        if v == 1:
            count += 1
            continue
        m = (a + b) / 2
        if sf(m) == 0:
            count += 1
        stack.append((a, m))
        stack.append((m, b))
    return count
