"""
Truncated multivariate power series in the face weights.

Every coefficient handled by the package lives in

    Q[[t_2, t_4, ..., t_2d]] / (total degree > N)

A :class:`WeightConfig` fixes the active weights and the truncation order
``N``; a :class:`WeightSeries` is a sparse map from exponent vectors (one
exponent per active weight) to exact rationals.  Rationals are
:class:`fractions.Fraction` throughout; nothing is ever rounded.

    >>> cfg = WeightConfig((4,), 2)
    >>> t = WeightSeries.variable(cfg, 4)
    >>> (1 + 3*t) * (1 + 3*t)
    WeightSeries(1 + 6*t4 + 9*t4^2)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Tuple

Exponent = Tuple[int, ...]


class ConfigurationError(ValueError):
    """Raised when series built over different weight configurations meet."""


class NonUnitError(ArithmeticError):
    """Raised when inverting a series whose constant term vanishes."""


class BranchError(ArithmeticError):
    """Raised by :meth:`WeightSeries.sqrt` away from the branch through 1."""


@dataclass(frozen=True)
class WeightConfig:
    """Active weight indices ``2k`` (sorted) and the truncation order."""

    weights: Tuple[int, ...] = ()
    order: int = 0

    def __post_init__(self):
        weights = tuple(sorted(int(w) for w in self.weights))
        if len(set(weights)) != len(weights):
            raise ConfigurationError("weight indices must be distinct: %r" % (self.weights,))
        for w in weights:
            if w <= 0 or w % 2:
                raise ConfigurationError("weight indices must be even and positive, got %r" % w)
        if self.order < 0:
            raise ConfigurationError("truncation order must be >= 0")
        object.__setattr__(self, "weights", weights)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def max_half_degree(self) -> int:
        """``d`` such that the largest weighted face has degree ``2d`` (1 when empty)."""
        return max(self.weights) // 2 if self.weights else 1

    def index(self, weight: int) -> int:
        try:
            return self.weights.index(weight)
        except ValueError:
            raise ConfigurationError("t%d is not an active weight of %r" % (weight, self)) from None

    def with_order(self, order: int) -> "WeightConfig":
        return WeightConfig(self.weights, order)

    def exponents(self) -> Iterator[Exponent]:
        """All exponent vectors of total degree <= order, by degree then lexicographically."""
        for deg in range(self.order + 1):
            yield from _compositions(deg, self.nvars)


def _compositions(total: int, parts: int) -> Iterator[Exponent]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError("exact rational expected, got %r" % (c,))


class WeightSeries:
    """
    Immutable element of the truncated weight ring.

    Arithmetic with ints and Fractions is supported directly; two series
    must share the same :class:`WeightConfig`.
    """

    __slots__ = ("config", "_terms")

    def __init__(self, config: WeightConfig, terms: Dict[Exponent, Fraction] | None = None):
        self.config = config
        clean = {}
        if terms:
            n, order = config.nvars, config.order
            for e, c in terms.items():
                if len(e) != n:
                    raise ConfigurationError("exponent %r does not match %d weights" % (e, n))
                if c and sum(e) <= order:
                    clean[tuple(e)] = _as_fraction(c)
        self._terms = clean

    @classmethod
    def _raw(cls, config, terms):
        # terms already canonical: no zeros, degrees within the window
        obj = object.__new__(cls)
        obj.config = config
        obj._terms = terms
        return obj

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, config: WeightConfig) -> "WeightSeries":
        return cls._raw(config, {})

    @classmethod
    def constant(cls, config: WeightConfig, c) -> "WeightSeries":
        c = _as_fraction(c)
        return cls._raw(config, {(0,) * config.nvars: c} if c else {})

    @classmethod
    def one(cls, config: WeightConfig) -> "WeightSeries":
        return cls.constant(config, 1)

    @classmethod
    def variable(cls, config: WeightConfig, weight: int) -> "WeightSeries":
        """The formal weight ``t_weight``."""
        e = [0] * config.nvars
        e[config.index(weight)] = 1
        return cls(config, {tuple(e): Fraction(1)})

    # -- inspection -----------------------------------------------------

    def items(self) -> Iterable[Tuple[Exponent, Fraction]]:
        return self._terms.items()

    def __getitem__(self, e: Exponent) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def coefficient(self, e: Exponent) -> Fraction:
        return self[e]

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.config.nvars, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def univariate(self) -> list:
        """Dense coefficient list ``[c_0, ..., c_N]`` for a single-weight config."""
        if self.config.nvars != 1:
            raise ConfigurationError("univariate() needs exactly one active weight")
        out = [Fraction(0)] * (self.config.order + 1)
        for (k,), c in self._terms.items():
            out[k] = c
        return out

    def homogeneous_parts(self) -> Dict[int, Dict[Exponent, Fraction]]:
        parts: Dict[int, Dict[Exponent, Fraction]] = {}
        for e, c in self._terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return parts

    # -- ring operations ------------------------------------------------

    def _check(self, other: "WeightSeries"):
        if other.config != self.config:
            raise ConfigurationError("mismatched weight configurations: %r vs %r" % (self.config, other.config))

    def _coerce(self, other) -> "WeightSeries | None":
        if isinstance(other, WeightSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return WeightSeries.constant(self.config, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return WeightSeries._raw(self.config, terms)

    __radd__ = __add__

    def __neg__(self):
        return WeightSeries._raw(self.config, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

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

    def scale(self, c) -> "WeightSeries":
        c = _as_fraction(c)
        if not c:
            return WeightSeries._raw(self.config, {})
        if c == 1:
            return self
        return WeightSeries._raw(self.config, {e: v * c for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, WeightSeries):
            if isinstance(other, Rational):
                return self.scale(other)
            return NotImplemented
        self._check(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return WeightSeries._raw(self.config, {})
        order = self.config.order
        if self.config.nvars == 0:
            c = a[()] * b[()]
            return WeightSeries._raw(self.config, {(): c} if c else {})
        if self.config.nvars == 1:
            out: Dict[Exponent, Fraction] = {}
            for (i,), ca in a.items():
                for (j,), cb in b.items():
                    k = i + j
                    if k <= order:
                        key = (k,)
                        out[key] = out.get(key, 0) + ca * cb
            return WeightSeries._raw(self.config, {e: c for e, c in out.items() if c})
        bl = [(e, sum(e), c) for e, c in b.items()]
        out = {}
        for ea, ca in a.items():
            da = sum(ea)
            for eb, db, cb in bl:
                if da + db > order:
                    continue
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return WeightSeries._raw(self.config, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = WeightSeries.one(self.config)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, WeightSeries):
            return self.config == other.config and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == WeightSeries.constant(self.config, other)._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.config, frozenset(self._terms.items())))

    def inverse(self) -> "WeightSeries":
        """Multiplicative inverse, solved degree by degree."""
        a0 = self.constant_term
        if not a0:
            raise NonUnitError("constant term is zero; %r is not a unit" % (self,))
        parts = self.homogeneous_parts()
        inv0 = 1 / a0
        zero = (0,) * self.config.nvars
        b = {0: WeightSeries._raw(self.config, {zero: inv0})}
        hom = {d: WeightSeries._raw(self.config, p) for d, p in parts.items()}
        for d in range(1, self.config.order + 1):
            acc = WeightSeries.zero(self.config)
            for i in range(1, d + 1):
                if i in hom and (d - i) in b:
                    acc = acc + hom[i] * b[d - i]
            if acc:
                b[d] = acc.scale(-inv0)
        return _sum(self.config, b.values())

    def __truediv__(self, other):
        if isinstance(other, WeightSeries):
            return self * other.inverse()
        if isinstance(other, (int, Fraction, Rational)):
            return self.scale(1 / _as_fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            return self.inverse().scale(other)
        return NotImplemented

    def sqrt(self) -> "WeightSeries":
        """Square root on the branch with constant term 1."""
        if self.constant_term != 1:
            raise BranchError("sqrt() needs constant term 1, got %s" % self.constant_term)
        hom = {d: WeightSeries._raw(self.config, p) for d, p in self.homogeneous_parts().items()}
        b = {0: WeightSeries.one(self.config)}
        # (sum b_d)^2 = a  =>  2 b_d = a_d - sum_{0<i<d} b_i b_{d-i}
        for d in range(1, self.config.order + 1):
            acc = hom.get(d, WeightSeries.zero(self.config))
            for i in range(1, d):
                if i in b and (d - i) in b:
                    acc = acc - b[i] * b[d - i]
            if acc:
                b[d] = acc.scale(Fraction(1, 2))
        return _sum(self.config, b.values())

    def truncate(self, order: int) -> "WeightSeries":
        """Reinterpret in the same weights at a lower truncation order."""
        if order > self.config.order:
            raise ConfigurationError("cannot raise the truncation order from %d to %d" % (self.config.order, order))
        cfg = self.config.with_order(order)
        return WeightSeries._raw(cfg, {e: c for e, c in self._terms.items() if sum(e) <= order})

    # -- display --------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        names = ["t%d" % w for w in self.config.weights]
        pieces = []
        for e in sorted(self._terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            c = self._terms[e]
            mono = "*".join(n if k == 1 else "%s^%d" % (n, k) for n, k in zip(names, e) if k)
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = "%s*%s" % (_paren(c), mono)
            pieces.append(s)
        out = pieces[0]
        for p in pieces[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return "WeightSeries(%s)" % self


def _paren(c: Fraction) -> str:
    return "(%s)" % c if c.denominator != 1 else str(c)


def _sum(config: WeightConfig, items: Iterable[WeightSeries]) -> WeightSeries:
    acc = WeightSeries.zero(config)
    for x in items:
        acc = acc + x
    return acc
