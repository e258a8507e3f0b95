"""
Rational functions of the Zhukovsky variable ``z`` and their local expansions.

A :class:`ZRational` is ``N(z) / (z^p (z-1)^m (z+1)^q)`` with ``N`` a
polynomial whose coefficients are exact rationals or :class:`WeightSeries`.
That denominator family is closed under the operations the recursion needs
(sums, products, ``z -> 1/z``, derivatives), and keeping it fixed lets
canonicalisation be exact even though the weight ring has zero divisors:
dividing by the monic factors ``z``, ``z-1``, ``z+1`` is synthetic division
and the remainder test is an exact zero test.

:class:`LaurentLocal` is a truncated Laurent series at one of the points
``1, -1, 0, INF``.  The highest known exponent is always explicit; asking
for a coefficient beyond it raises :class:`OrderDeficitError` instead of
returning a silently truncated value.  At ``INF`` the local variable is
``u = 1/z``.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Union

from .coeff_ring import WeightSeries, ConfigurationError

INF = "oo"
POINTS = (1, -1, 0, INF)

Coeff = Union[Fraction, WeightSeries]


class OrderDeficitError(ArithmeticError):
    """A coefficient beyond the known precision of a local expansion was requested."""


# -- coefficient helpers --------------------------------------------------
# ring is None for plain rationals, otherwise the shared WeightConfig

def _zero(ring):
    return Fraction(0) if ring is None else WeightSeries.zero(ring)


def _one(ring):
    return Fraction(1) if ring is None else WeightSeries.one(ring)


def _ring_of(c):
    return c.config if isinstance(c, WeightSeries) else None


def _join(r1, r2):
    if r1 is None:
        return r2
    if r2 is None or r1 == r2:
        return r1
    raise ConfigurationError("mismatched weight configurations: %r vs %r" % (r1, r2))


def _lift(c, ring):
    if ring is None or isinstance(c, WeightSeries):
        return c
    return WeightSeries.constant(ring, c)


def _is_unit(c) -> bool:
    if isinstance(c, WeightSeries):
        return c.constant_term != 0
    return c != 0


def _inv(c):
    return c.inverse() if isinstance(c, WeightSeries) else 1 / Fraction(c)


def neg_binomial_series(a, k: int, length: int) -> List[Fraction]:
    """Coefficients of ``(a + w)^(-k)`` in powers of ``w`` (``a`` a nonzero rational)."""
    a = Fraction(a)
    base = a ** (-k)
    out = []
    for i in range(length):
        # C(-k, i) = (-1)^i C(k+i-1, i)
        c = comb(k + i - 1, i) if k > 0 else (1 if i == 0 else 0)
        out.append(base * (-1) ** i * c / a ** i)
    return out


def _poly_mul(a: Sequence, b: Sequence, ring) -> list:
    if not a or not b:
        return []
    out = [_zero(ring) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def _poly_add(a: Sequence, b: Sequence, ring) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else None
        y = b[i] if i < len(b) else None
        if x is None:
            out.append(_lift(y, ring))
        elif y is None:
            out.append(_lift(x, ring))
        else:
            out.append(_lift(x + y, ring))
    return out


def _linear_power(c: int, e: int) -> List[int]:
    """Coefficients of ``(z + c)^e``."""
    return [comb(e, i) * c ** (e - i) for i in range(e + 1)]


class ZRational:
    """
    ``num(z) / (z^p (z-1)^m (z+1)^q)`` in canonical form.

    ``num`` lists coefficients from ``z^0`` upwards.  Instances are
    immutable and compare structurally (the canonical form is unique).
    """

    __slots__ = ("num", "p", "m", "q", "ring")

    def __init__(self, num: Sequence[Coeff], p: int = 0, m: int = 0, q: int = 0, ring=None):
        if min(p, m, q) < 0:
            raise ValueError("denominator exponents must be >= 0")
        for c in num:
            ring = _join(ring, _ring_of(c))
        num = [_lift(c, ring) for c in num]
        self.ring = ring
        self.num, self.p, self.m, self.q = _canonical(num, p, m, q, ring)

    # -- constructors ---------------------------------------------------

    @classmethod
    def const(cls, c, ring=None) -> "ZRational":
        return cls([c], ring=ring)

    @classmethod
    def z(cls, ring=None) -> "ZRational":
        return cls([Fraction(0), Fraction(1)], ring=ring)

    @classmethod
    def pole(cls, beta, k: int, c=Fraction(1), ring=None) -> "ZRational":
        """``c / (z - beta)^k`` for ``beta`` in ``{0, 1, -1}``."""
        if beta == 0:
            return cls([c], p=k, ring=ring)
        if beta == 1:
            return cls([c], m=k, ring=ring)
        if beta == -1:
            return cls([c], q=k, ring=ring)
        raise ValueError("poles are restricted to z = 0, 1, -1")

    @classmethod
    def laurent(cls, coeffs: Dict[int, Coeff], ring=None) -> "ZRational":
        """Laurent polynomial ``sum c_k z^k`` (negative ``k`` allowed)."""
        if not coeffs:
            return cls([], ring=ring)
        lo = min(min(coeffs), 0)
        hi = max(coeffs)
        num = [coeffs.get(k + lo, Fraction(0)) for k in range(hi - lo + 1)]
        return cls(num, p=-lo, ring=ring)

    # -- basic structure ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    @property
    def degree(self) -> int:
        return len(self.num) - 1

    def pole_order(self, point) -> int:
        """Order of the pole at ``point`` (negative for a zero; 0 if regular and nonvanishing)."""
        if self.is_zero():
            raise ValueError("pole order of the zero function")
        if point == 0:
            return self.p - _valuation_at(self.num, 0)
        if point == 1:
            return self.m - _valuation_at(self.num, 1)
        if point == -1:
            return self.q - _valuation_at(self.num, -1)
        if point == INF:
            return self.degree - (self.p + self.m + self.q)
        raise ValueError("unknown point %r" % (point,))

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ZRational):
            return other
        if isinstance(other, (int, Fraction, WeightSeries)):
            return ZRational.const(other, ring=self.ring)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ring = _join(self.ring, other.ring)
        p, m, q = max(self.p, other.p), max(self.m, other.m), max(self.q, other.q)
        a = _raise_den(self.num, p - self.p, m - self.m, q - self.q, ring)
        b = _raise_den(other.num, p - other.p, m - other.m, q - other.q, ring)
        return ZRational(_poly_add(a, b, ring), p, m, q, ring)

    __radd__ = __add__

    def __neg__(self):
        return ZRational([-c for c in self.num], self.p, self.m, self.q, self.ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, WeightSeries)):
            ring = _join(self.ring, _ring_of(other))
            return ZRational([c * other for c in self.num], self.p, self.m, self.q, ring)
        if not isinstance(other, ZRational):
            return NotImplemented
        ring = _join(self.ring, other.ring)
        return ZRational(_poly_mul(self.num, other.num, ring),
                         self.p + other.p, self.m + other.m, self.q + other.q, ring)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = ZRational.const(1, ring=self.ring)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, ZRational) else other
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    # -- transformations ------------------------------------------------

    def involute(self) -> "ZRational":
        """``a(1/z)``: the Galois involution of the Zhukovsky covering."""
        if self.is_zero():
            return self
        deg = self.degree
        rev = list(reversed(self.num))
        # N(1/z) = rev(z)/z^deg ; 1/z^{-p} = z^p ; (1/z - 1)^{-m} = (-1)^m z^m/(z-1)^m ; (1/z + 1)^{-q} = z^q/(z+1)^q
        shift = self.p + self.m + self.q - deg
        sign = -1 if self.m % 2 else 1
        if sign < 0:
            rev = [-c for c in rev]
        if shift >= 0:
            return ZRational([Fraction(0)] * shift + rev, 0, self.m, self.q, self.ring)
        return ZRational(rev, -shift, self.m, self.q, self.ring)

    def derivative(self) -> "ZRational":
        """``d/dz`` of the function."""
        dnum = [c * i for i, c in enumerate(self.num)][1:]
        out = ZRational(dnum, self.p, self.m, self.q, self.ring)
        log_den = ZRational.const(0)
        if self.p:
            log_den = log_den + ZRational.pole(0, 1, Fraction(self.p))
        if self.m:
            log_den = log_den + ZRational.pole(1, 1, Fraction(self.m))
        if self.q:
            log_den = log_den + ZRational.pole(-1, 1, Fraction(self.q))
        return out - self * log_den

    def substitute_square(self) -> "ZRational":
        """``a(z^2)``; only defined when no ``(z+1)`` factor sits in the denominator."""
        if self.q:
            raise ValueError("z -> z^2 maps (z+1) to (z^2+1), outside the denominator family")
        num = []
        for c in self.num:
            num.extend([c, Fraction(0)])
        return ZRational(num[:-1] if num else [], 2 * self.p, self.m, self.m, self.ring)

    def evaluate(self, z) -> Coeff:
        """Value at a rational point away from the poles."""
        z = Fraction(z)
        den = z ** self.p * (z - 1) ** self.m * (z + 1) ** self.q
        if den == 0:
            raise ZeroDivisionError("evaluation at a pole")
        acc = _zero(self.ring)
        for c in reversed(self.num):
            acc = acc * z + c
        return acc * (1 / den)

    def value_at(self, point) -> Coeff:
        """Value at one of ``0, 1, -1`` where ``a`` is regular."""
        if not self.is_zero() and self.pole_order(point) > 0:
            raise ZeroDivisionError("pole at z = %s" % point)
        return zr_expand(self, point, 0)[0]

    def map_coeffs(self, fn) -> "ZRational":
        return ZRational([fn(c) for c in self.num], self.p, self.m, self.q, self.ring)

    def expand(self, point, order: int) -> "LaurentLocal":
        return zr_expand(self, point, order)

    def residue(self, point) -> Coeff:
        return zr_residue(self, point)

    # -- display --------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.num):
            if not c:
                continue
            cs = str(c)
            if " " in cs or (isinstance(c, Fraction) and c.denominator != 1):
                cs = "(%s)" % cs
            mono = "" if i == 0 else ("z" if i == 1 else "z^%d" % i)
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            elif cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append("%s*%s" % (cs, mono))
        num = " + ".join(terms).replace("+ -", "- ")
        den = []
        if self.p:
            den.append("z" if self.p == 1 else "z^%d" % self.p)
        if self.m:
            den.append("(z-1)" if self.m == 1 else "(z-1)^%d" % self.m)
        if self.q:
            den.append("(z+1)" if self.q == 1 else "(z+1)^%d" % self.q)
        if not den:
            return num
        return "(%s)/(%s)" % (num, "*".join(den))

    def __repr__(self):
        return "ZRational(%s)" % self


def _valuation_at(num: Sequence, c: int) -> int:
    v = 0
    while num:
        rem, quo = _synthetic_division(num, c)
        if rem:
            break
        num = quo
        v += 1
    return v


def _synthetic_division(num: Sequence, c: int):
    """Divide by the monic ``(z - c)``; returns ``(remainder, quotient)``."""
    if c == 0:
        return num[0], list(num[1:])
    n = len(num)
    quo = [None] * (n - 1)
    acc = num[-1]
    for i in range(n - 2, -1, -1):
        quo[i] = acc
        acc = num[i] + acc * c
    return acc, quo


def _canonical(num: list, p: int, m: int, q: int, ring):
    while num and not num[-1]:
        num = num[:-1]
    if not num:
        return [], 0, 0, 0
    while p and num and not num[0]:
        num = num[1:]
        p -= 1
    for c, attr in ((1, "m"), (-1, "q")):
        e = m if attr == "m" else q
        while e:
            rem, quo = _synthetic_division(num, c)
            if rem:
                break
            num = quo
            e -= 1
        if attr == "m":
            m = e
        else:
            q = e
    while num and not num[-1]:
        num = num[:-1]
    return num, p, m, q


def _raise_den(num: Sequence, dp: int, dm: int, dq: int, ring) -> list:
    out = list(num)
    if dp:
        out = [_zero(ring)] * dp + out
    if dm:
        out = _poly_mul(out, [Fraction(x) for x in _linear_power(-1, dm)], ring)
    if dq:
        out = _poly_mul(out, [Fraction(x) for x in _linear_power(1, dq)], ring)
    return out


# -- local Laurent series -------------------------------------------------

class LaurentLocal:
    """
    Truncated Laurent series ``sum_{e=start}^{order} c_e w^e`` at ``point``.

    ``w = z - point`` for finite points and ``w = 1/z`` at ``INF``.
    Coefficients below ``start`` are zero (``start`` is a valuation lower
    bound and may exceed ``order``); other coefficients above ``order`` are
    unknown.
    """

    __slots__ = ("point", "start", "coeffs", "order", "ring")

    def __init__(self, point, start: int, coeffs: Sequence[Coeff], order: int | None = None, ring=None):
        if order is None:
            order = start + len(coeffs) - 1
        coeffs = list(coeffs[: max(0, order - start + 1)])
        for c in coeffs:
            ring = _join(ring, _ring_of(c))
        if len(coeffs) < order - start + 1:
            coeffs += [_zero(ring)] * (order - start + 1 - len(coeffs))
        # drop leading zeros; start stays a valuation lower bound even past order
        i = 0
        while i < len(coeffs) and not coeffs[i]:
            i += 1
        self.point = point
        self.start = start + i
        self.coeffs = [_lift(c, ring) for c in coeffs[i:]]
        self.order = order
        self.ring = ring

    @classmethod
    def monomial(cls, point, exponent: int, c, order: int) -> "LaurentLocal":
        return cls(point, exponent, [c], order=order)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, e: int) -> Coeff:
        if e < self.start:
            return _zero(self.ring)
        if e > self.order:
            raise OrderDeficitError("coefficient w^%d requested but series known only to w^%d" % (e, self.order))
        return self.coeffs[e - self.start]

    coefficient = __getitem__

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.start + i, c

    def truncate(self, order: int) -> "LaurentLocal":
        if order > self.order:
            raise OrderDeficitError("cannot extend w^%d-accurate series to w^%d" % (self.order, order))
        return LaurentLocal(self.point, self.start, self.coeffs, order, self.ring)

    def _check(self, other):
        if other.point != self.point:
            raise ValueError("expansions at different points: %r, %r" % (self.point, other.point))

    def __add__(self, other):
        if not isinstance(other, LaurentLocal):
            return NotImplemented
        self._check(other)
        ring = _join(self.ring, other.ring)
        order = min(self.order, other.order)
        start = min(self.start, other.start)
        if start > order:
            return LaurentLocal(self.point, start, [], order, ring)
        coeffs = [_zero(ring)] * (order - start + 1)
        for src in (self, other):
            for i, c in enumerate(src.coeffs):
                e = src.start + i
                if e <= order:
                    coeffs[e - start] = coeffs[e - start] + c
        return LaurentLocal(self.point, start, coeffs, order, ring)

    def __neg__(self):
        return LaurentLocal(self.point, self.start, [-c for c in self.coeffs], self.order, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LaurentLocal":
        ring = _join(self.ring, _ring_of(c))
        return LaurentLocal(self.point, self.start, [x * c for x in self.coeffs], self.order, ring)

    def shift(self, k: int) -> "LaurentLocal":
        """Multiply by ``w^k``."""
        return LaurentLocal(self.point, self.start + k, self.coeffs, self.order + k, self.ring)

    def mul(self, other: "LaurentLocal", order: int | None = None) -> "LaurentLocal":
        """Product, optionally truncated further to ``order``."""
        self._check(other)
        ring = _join(self.ring, other.ring)
        known = min(self.order + other.start, other.order + self.start)
        if order is None:
            order = known
        elif order > known and order >= self.start + other.start:
            raise OrderDeficitError("product known to w^%d, w^%d requested" % (known, order))
        start = self.start + other.start
        if start > order or not self.coeffs or not other.coeffs:
            return LaurentLocal(self.point, max(start, order + 1), [], order, ring)
        n = order - start + 1
        out = [_zero(ring)] * n
        b = other.coeffs
        for i, x in enumerate(self.coeffs):
            if i >= n:
                break
            if not x:
                continue
            for j in range(min(len(b), n - i)):
                y = b[j]
                if y:
                    out[i + j] = out[i + j] + x * y
        return LaurentLocal(self.point, start, out, order, ring)

    def __mul__(self, other):
        if isinstance(other, LaurentLocal):
            return self.mul(other)
        if isinstance(other, (int, Fraction, WeightSeries)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 1:
            raise ValueError("LaurentLocal powers need k >= 1")
        out = self
        for _ in range(k - 1):
            out = out.mul(self)
        return out

    def inverse(self) -> "LaurentLocal":
        """Reciprocal; the leading coefficient must be a unit."""
        if self.is_zero():
            raise OrderDeficitError("cannot invert: no nonzero coefficient within the known window")
        lead = self.coeffs[0]
        if not _is_unit(lead):
            raise ArithmeticError("leading coefficient %s is not a unit" % (lead,))
        inv0 = _inv(lead)
        e = self.start
        r = self.order - e
        a = self.coeffs
        b = [inv0]
        for d in range(1, r + 1):
            acc = _zero(self.ring)
            for i in range(1, min(d, len(a) - 1) + 1):
                acc = acc + a[i] * b[d - i]
            b.append(-(acc * inv0))
        return LaurentLocal(self.point, -e, b, -e + r, self.ring)

    def residue(self) -> Coeff:
        """Residue of ``f(z) dz`` where this is the expansion of ``f``."""
        if self.point == INF:
            # dz = -du/u^2, so the residue is minus the coefficient of u^1 = z^-1
            return -self[1]
        return self[-1]

    def __repr__(self):
        body = ", ".join("%d: %s" % (e, c) for e, c in self.items())
        return "LaurentLocal(at=%s, {%s}, O(w^%d))" % (self.point, body, self.order + 1)


def laurent_combine(series: Sequence[LaurentLocal], weights: Sequence[Coeff]) -> LaurentLocal:
    """Linear combination ``sum w_i s_i`` of expansions at one point."""
    if len(series) != len(weights) or not series:
        raise ValueError("need matching, nonempty lists of series and weights")
    acc = None
    for s, w in zip(series, weights):
        term = s.scale(w)
        acc = term if acc is None else acc + term
    return acc


def laurent_mul(a: LaurentLocal, b: LaurentLocal, order: int | None = None) -> LaurentLocal:
    return a.mul(b, order)


def zr_expand(a: ZRational, point, order: int) -> LaurentLocal:
    """Exact Laurent expansion of ``a`` at ``point`` through ``w^order``."""
    ring = a.ring
    if a.is_zero():
        return LaurentLocal(point, max(order + 1, 0), [], order, ring)
    if point == INF:
        # a(1/u) = N(1/u) u^{p+m+q} (1-u)^{-m} (1+u)^{-q}
        deg = a.degree
        shift = a.p + a.m + a.q
        start = shift - deg
        length = order - start + 1
        if length <= 0:
            return LaurentLocal(point, start, [], order, ring)
        num = LaurentLocal(point, start, list(reversed(a.num)), order=order, ring=ring)
        factor = _scalar_factor_series([(-1, a.m), (1, a.q)], length)
        return num.mul(LaurentLocal(point, 0, factor, order=length - 1), order)
    if point not in (0, 1, -1):
        raise ValueError("unknown expansion point %r" % (point,))
    c = point
    powers = {0: a.p, 1: a.m, -1: a.q}
    start = -powers[c]
    length = order - start + 1
    if length <= 0:
        return LaurentLocal(point, start, [], order, ring)
    # numerator N(c + w)
    shifted = [_zero(ring) for _ in range(min(len(a.num), length))]
    for i, coef in enumerate(a.num):
        if not coef:
            continue
        for j in range(min(i + 1, length)):
            k = comb(i, j) * c ** (i - j)
            if k:
                shifted[j] = shifted[j] + coef * k
    # regular denominator factors (z - r)^{-e} = ((c - r) + w)^{-e}
    factors = [(c - r, e) for r, e in powers.items() if r != c and e]
    factor = [Fraction(1)] + [Fraction(0)] * (length - 1)
    for base, e in factors:
        factor = _trunc_mul(factor, neg_binomial_series(base, e, length), length)
    body = LaurentLocal(point, 0, shifted, order=length - 1, ring=ring)
    return body.mul(LaurentLocal(point, 0, factor, order=length - 1), length - 1).shift(start)


def _scalar_factor_series(factors, length: int) -> List[Fraction]:
    """Product of ``(1 + s u)^{-e}`` for ``(s, e)`` pairs, as a power series in ``u``."""
    out = [Fraction(1)] + [Fraction(0)] * (length - 1)
    for s, e in factors:
        if e:
            ser = neg_binomial_series(1, e, length)
            ser = [x * s ** i for i, x in enumerate(ser)]
            out = _trunc_mul(out, ser, length)
    return out


def _trunc_mul(a, b, length):
    out = [Fraction(0)] * length
    for i, x in enumerate(a[:length]):
        if x:
            for j in range(min(len(b), length - i)):
                out[i + j] += x * b[j]
    return out


def zr_residue(a: ZRational, point) -> Coeff:
    """Residue of the 1-form ``a(z) dz`` at ``point``."""
    return zr_expand(a, point, 1 if point == INF else -1).residue()
