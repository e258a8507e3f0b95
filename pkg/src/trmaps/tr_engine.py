"""
Topological recursion on the Zhukovsky-type curves.

Stable forms are stored in polar form

    omega_{g,n} = sum  c[(b_1,k_1), ..., (b_n,k_n)]  prod_i dz_i / (z_i - b_i)^{k_i}

with ``b_i`` in ``{+1, -1}`` and ``k_i >= 1``.  New forms are produced by
``omega_{g,n+1}(z_0, I) = sign * sum_beta Res_{q -> beta} K(z_0, q) [...]``,
growing the first leg.  Residues are taken from local expansions in
``w = q - beta``.  Every spectator leg is either carried over from a stored
form (keeping its descriptor) or comes from a ``B(q, z_i)`` factor whose
expansion at ``beta`` is again polar at ``beta`` in ``z_i``; the kernel
numerator ``1/2 [1/(z_0 - q) - 1/(z_0 - 1/q)]`` likewise expands in powers of
``1/(z_0 - beta)``.  No two-variable rational arithmetic is ever needed.

Sign convention: the kernel is the standard
``K = 1/2 int_{1/q}^{q} B(z_0, .) / (omega01(q) - omega01(1/q))``
and ``sign`` multiplies every application of it.  With ``sign = +1`` the
ordinary Gaussian curve returns ``omega_{1,1} = -z^3 dz / (z^2-1)^4`` and
the count extraction ``(-1)^n Res x^l omega`` yields negative map counts, so
the engine defaults to ``DEFAULT_SIGN = -1``.  This is equivalent to
flipping the sign of ``omega01``; ``omega_{g,n}`` changes by
``sign^(2g-2+n)``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from .coeff_ring import WeightSeries
from .curve import SpectralCurveData
from .zfun import LaurentLocal, OrderDeficitError, ZRational, zr_expand

DEFAULT_SIGN = -1

Desc = Tuple[int, int]
Key = Tuple[Desc, ...]


class UnstableTopologyError(ValueError):
    """Raised when a stable-only operation is asked for (0,1) or (0,2)."""


class OmegaForm:
    """A stable ``omega_{g,n}`` in the polar basis."""

    __slots__ = ("g", "n", "terms", "config")

    def __init__(self, g: int, n: int, terms: Dict[Key, WeightSeries], config):
        self.g, self.n, self.config = g, n, config
        self.terms = {k: v for k, v in terms.items() if v}

    def max_order(self, beta: int, leg: int | None = None) -> int:
        """Highest pole order at ``beta`` over one leg (or all legs)."""
        best = 0
        legs = range(self.n) if leg is None else (leg,)
        for key in self.terms:
            for i in legs:
                b, k = key[i]
                if b == beta and k > best:
                    best = k
        return best

    def permute(self, perm: Iterable[int]) -> "OmegaForm":
        """Relabel legs: new leg ``i`` is old leg ``perm[i]``."""
        perm = tuple(perm)
        return OmegaForm(self.g, self.n, {tuple(k[p] for p in perm): v for k, v in self.terms.items()},
                         self.config)

    def is_symmetric(self) -> bool:
        for i in range(self.n - 1):
            perm = list(range(self.n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute(perm) != self:
                return False
        return True

    def leg_function(self, rest: Key, leg: int = 0) -> ZRational:
        """The coefficient of ``dz_leg`` with the other legs fixed to descriptor ``rest``."""
        acc = ZRational.const(WeightSeries.zero(self.config))
        for key, c in self.terms.items():
            if key[:leg] + key[leg + 1:] == rest:
                b, k = key[leg]
                acc = acc + ZRational.pole(b, k, c)
        return acc

    def rest_keys(self, leg: int = 0) -> set:
        return {k[:leg] + k[leg + 1:] for k in self.terms}

    def residue_free(self) -> bool:
        """True iff no leg carries a simple pole at a ramification point once summed."""
        for leg in range(self.n):
            sums: Dict[Key, WeightSeries] = {}
            for key, c in self.terms.items():
                if key[leg][1] == 1:
                    r = key[:leg] + ((key[leg][0], 1),) + key[leg + 1:]
                    sums[r] = sums.get(r, WeightSeries.zero(self.config)) + c
            if any(sums.values()):
                return False
        return True

    def map(self, fn) -> "OmegaForm":
        return OmegaForm(self.g, self.n, {k: fn(v) for k, v in self.terms.items()}, self.config)

    def __eq__(self, other):
        if not isinstance(other, OmegaForm):
            return NotImplemented
        return (self.g, self.n, self.terms) == (other.g, other.n, other.terms)

    __hash__ = None

    def __str__(self):
        def mono(b, k, i):
            z = "z%d" % (i + 1) if self.n > 1 else "z"
            base = "(%s%s1)" % (z, "-" if b == 1 else "+")
            return base if k == 1 else "%s^%d" % (base, k)

        lines = []
        for key in sorted(self.terms, key=lambda k: tuple((-b, -kk) for b, kk in k)):
            c = self.terms[key]
            den = "*".join(mono(b, k, i) for i, (b, k) in enumerate(key))
            lines.append("  (%s) / %s" % (c, den))
        head = "omega_{%d,%d} = [\n" % (self.g, self.n)
        return head + "\n".join(lines) + "\n] dz" + ("" if self.n == 1 else "1...dz%d" % self.n)

    def __repr__(self):
        return "OmegaForm(g=%d, n=%d, %d terms)" % (self.g, self.n, len(self.terms))


# -- scalar local expansions (pure rationals, cached) ---------------------

@lru_cache(maxsize=None)
def _basis_q(beta: int, b: int, k: int, order: int) -> LaurentLocal:
    """``(q - b)^-k`` at ``q = beta``."""
    return zr_expand(ZRational.pole(b, k), beta, order)


@lru_cache(maxsize=None)
def _basis_sigma(beta: int, b: int, k: int, order: int) -> LaurentLocal:
    """dq-coefficient of the pulled-back basis form ``d(1/q) / (1/q - b)^k`` at ``q = beta``."""
    f = ZRational.pole(b, k).involute() * ZRational.pole(0, 2, Fraction(-1))
    return zr_expand(f, beta, order)


@lru_cache(maxsize=None)
def _sigma_shift(beta: int, order: int) -> LaurentLocal:
    """``v = 1/q - beta`` at ``q = beta``."""
    return zr_expand(ZRational.laurent({-1: Fraction(1), 0: Fraction(-beta)}), beta, order)


@lru_cache(maxsize=None)
def _inv_q_sq(beta: int, order: int) -> LaurentLocal:
    return zr_expand(ZRational.pole(0, 2), beta, order)


@lru_cache(maxsize=None)
def _b02_q(beta: int, order: int) -> Dict[Key, LaurentLocal]:
    """``B(q, z)`` for ``q`` near ``beta``: ``sum_k (k-1) w^{k-2} / (z-beta)^k``."""
    out = {}
    for k in range(2, order + 3):
        out[((beta, k),)] = LaurentLocal.monomial(beta, k - 2, Fraction(k - 1), order)
    return out


@lru_cache(maxsize=None)
def _b02_sigma(beta: int, order: int) -> Dict[Key, LaurentLocal]:
    """``B(1/q, z)`` (dq-coefficient): ``-q^-2 sum_k (k-1) v^{k-2} / (z-beta)^k``."""
    # v has valuation 1, so v^{k-2} matters only for k - 2 <= order
    out = {}
    v = _sigma_shift(beta, order + 1)
    pref = _inv_q_sq(beta, order + 1).scale(Fraction(-1))
    power = None
    for k in range(2, order + 3):
        if k == 2:
            term = pref
        else:
            power = v if power is None else power.mul(v)
            term = pref.mul(power)
        out[((beta, k),)] = term.scale(Fraction(k - 1)).truncate(order)
    return out


@lru_cache(maxsize=None)
def _diag02(beta: int, order: int) -> LaurentLocal:
    """dq^2-coefficient of ``B(q, 1/q)``: ``-1 / (q^2 - 1)^2``."""
    return zr_expand(ZRational([Fraction(-1)], 0, 2, 2), beta, order)


@lru_cache(maxsize=None)
def _kernel_numerators(beta: int, jmax: int, order: int) -> Dict[int, LaurentLocal]:
    """``N_j = 1/2 (w^{j-1} - v^{j-1})``: coefficient of ``(z_0-beta)^-j`` in the kernel numerator."""
    v = _sigma_shift(beta, order)
    out = {}
    power = None
    for j in range(2, jmax + 1):
        power = v if power is None else power.mul(v)
        w = LaurentLocal.monomial(beta, j - 1, Fraction(1), power.order)
        out[j] = (w - power).scale(Fraction(1, 2))
    return out


def omega02_diag() -> ZRational:
    """dq^2-coefficient of ``B(q, 1/q)``."""
    return ZRational([Fraction(-1)], 0, 2, 2)


# -- the engine -----------------------------------------------------------

class TopologicalRecursion:
    """
    Memoised recursion for one curve.

    ``omega(g, n)`` returns the stable form; results are cached per
    ``(g, n)`` and never recomputed.
    """

    def __init__(self, curve: SpectralCurveData, sign: int = DEFAULT_SIGN):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.curve = curve
        self.config = curve.config
        self.sign = sign
        self._cache: Dict[Tuple[int, int], OmegaForm] = {}
        self._eval_cache: Dict = {}
        self._kden: Dict[int, LaurentLocal] = {}

    # -- unstable data --------------------------------------------------

    def omega01(self) -> ZRational:
        return self.curve.omega01

    def kernel_parts(self, beta: int, order: int):
        """``(numerator rule, 1/denominator)`` at ``beta``; the rule maps ``(jmax, order)`` to ``{j: N_j}``."""
        return (lambda jmax, o: _kernel_numerators(beta, jmax, o)), self._inverse_kden(beta, order)

    def _kden_valuation(self, beta: int) -> int:
        D = self.curve.kernel_denominator
        if D.is_zero():
            raise ArithmeticError("degenerate curve: omega01(q) - omega01(1/q) vanishes identically")
        return -D.pole_order(beta)

    def _inverse_kden(self, beta: int, order: int) -> LaurentLocal:
        cached = self._kden.get(beta)
        if cached is not None and cached.order >= order:
            return cached.truncate(order)
        val = self._kden_valuation(beta)
        inv = zr_expand(self.curve.kernel_denominator, beta, order + 2 * val).inverse()
        self._kden[beta] = inv
        return inv.truncate(order)

    # -- evaluation of stored forms at q or 1/q ---------------------------

    def _eval_first(self, g: int, n: int, beta: int, sigma: bool, order: int) -> Dict[Key, LaurentLocal]:
        """Form ``(g, n)`` with its first leg at ``q`` (or ``1/q``) near ``beta``, keyed by the other legs."""
        if (g, n) == (0, 2):
            return _b02_sigma(beta, order) if sigma else _b02_q(beta, order)
        ck = (g, n, beta, sigma, order)
        hit = self._eval_cache.get(ck)
        if hit is not None:
            return hit
        form = self.omega(g, n)
        basis = _basis_sigma if sigma else _basis_q
        acc: Dict[Key, Dict[int, WeightSeries]] = {}
        low: Dict[Key, int] = {}
        for key, c in form.terms.items():
            (b, k), rest = key[0], key[1:]
            e = basis(beta, b, k, order)
            slot = acc.setdefault(rest, {})
            low[rest] = min(low.get(rest, e.start), e.start)
            for ex, x in e.items():
                prev = slot.get(ex)
                slot[ex] = c * x if prev is None else prev + c * x
        out = self._assemble(acc, low, beta, order)
        self._eval_cache[ck] = out
        return out

    def _assemble(self, acc, low, beta, order) -> Dict[Key, LaurentLocal]:
        zero = WeightSeries.zero(self.config)
        out = {}
        for rest, slot in acc.items():
            lo = low[rest]
            coeffs = [slot.get(ex, zero) for ex in range(lo, order + 1)]
            out[rest] = LaurentLocal(beta, lo, coeffs, order, self.config)
        return out

    def _valuation(self, g: int, n: int, beta: int) -> int:
        """Lower bound for the w-valuation of form ``(g, n)`` evaluated at ``q`` or ``1/q``."""
        if (g, n) == (0, 2):
            return 0
        return -self.omega(g, n).max_order(beta)

    def _eval_double(self, g: int, n: int, beta: int, order: int) -> Dict[Key, LaurentLocal]:
        """``omega_{g,n}(q, 1/q, rest)`` near ``beta`` (dq^2-coefficient)."""
        if (g, n) == (0, 2):
            return {(): _diag02(beta, order)}
        form = self.omega(g, n)
        mo = form.max_order(beta)
        acc: Dict[Key, Dict[int, WeightSeries]] = {}
        low: Dict[Key, int] = {}
        for key, c in form.terms.items():
            (b0, k0), (b1, k1), rest = key[0], key[1], key[2:]
            prod = _pair_product(beta, b0, k0, b1, k1, order, mo)
            slot = acc.setdefault(rest, {})
            low[rest] = min(low.get(rest, prod.start), prod.start)
            for ex, x in prod.items():
                prev = slot.get(ex)
                slot[ex] = c * x if prev is None else prev + c * x
        return self._assemble(acc, low, beta, order)

    # -- the recursion --------------------------------------------------

    def omega(self, g: int, n: int) -> OmegaForm:
        if g < 0 or n < 1 or 2 * g - 2 + n <= 0:
            raise UnstableTopologyError(
                "omega(%d, %d) is unstable; use omega01()/counts_disk or counts_cylinder instead" % (g, n))
        hit = self._cache.get((g, n))
        if hit is not None:
            return hit
        terms: Dict[Key, WeightSeries] = {}
        for beta in self.curve.ramification_points:
            for key, c in self._residue_at(g, n, beta).items():
                prev = terms.get(key)
                terms[key] = c if prev is None else prev + c
        if self.sign != 1:
            terms = {k: -v for k, v in terms.items()}
        form = OmegaForm(g, n, terms, self.config)
        self._cache[(g, n)] = form
        return form

    def _bracket(self, g: int, n: int, beta: int, top: int) -> Dict[Key, LaurentLocal]:
        """
        ``omega_{g-1,n+1}(q, 1/q, I) + sum' omega(q, I1) omega(1/q, I2)`` near ``beta``,
        for the output ``omega_{g,n}`` (so ``|I| = n - 1``), through ``w^top``.
        """
        m = n - 1
        out: Dict[Key, LaurentLocal] = {}

        def add(key, s):
            prev = out.get(key)
            out[key] = s if prev is None else prev + s

        if g >= 1:
            for rest, s in self._eval_double(g - 1, m + 2, beta, top).items():
                add(rest, s)
        legs = tuple(range(m))
        for g1 in range(g + 1):
            g2 = g - g1
            for r in range(m + 1):
                for I1 in itertools.combinations(legs, r):
                    I2 = tuple(i for i in legs if i not in I1)
                    if (g1 == 0 and not I1) or (g2 == 0 and not I2):
                        continue
                    n1, n2 = len(I1) + 1, len(I2) + 1
                    v1 = self._valuation(g1, n1, beta)
                    v2 = self._valuation(g2, n2, beta)
                    if top - v2 < v1 or top - v1 < v2:
                        continue
                    e1 = self._eval_first(g1, n1, beta, False, top - v2)
                    e2 = self._eval_first(g2, n2, beta, True, top - v1)
                    for r1, s1 in e1.items():
                        for r2, s2 in e2.items():
                            if s1.start + s2.start > top:
                                continue
                            key = [None] * m
                            for pos, d in zip(I1, r1):
                                key[pos] = d
                            for pos, d in zip(I2, r2):
                                key[pos] = d
                            add(tuple(key), s1.mul(s2, top))
        return out

    def _residue_at(self, g: int, n: int, beta: int) -> Dict[Key, WeightSeries]:
        delta = self._kden_valuation(beta)
        # N_j has valuation >= j-1 >= 1, 1/D has valuation -delta: bracket needed through w^(delta-2)
        top = delta - 2
        bracket = self._bracket(g, n, beta, top)
        bracket = {k: s for k, s in bracket.items() if not s.is_zero()}
        if not bracket:
            return {}
        vmin = min(s.start for s in bracket.values())
        need = -1 - vmin          # highest exponent of M_j = N_j / D that can meet the bracket
        jmax = delta - vmin       # N_j / D has valuation >= j - 1 - delta
        if jmax < 2:
            return {}
        inv_d = self._inverse_kden(beta, need - 1)
        numerators = _kernel_numerators(beta, jmax, need + delta)
        kern = {j: N.mul(inv_d, need) for j, N in numerators.items()}
        out: Dict[Key, WeightSeries] = {}
        zero = WeightSeries.zero(self.config)
        for rest, s in bracket.items():
            for j, M in kern.items():
                acc = zero
                for a, mc in M.items():
                    b = -1 - a
                    if b < s.start:
                        break
                    if b > s.order:
                        raise OrderDeficitError("bracket known to w^%d, w^%d needed" % (s.order, b))
                    sc = s[b]
                    if sc:
                        acc = acc + mc * sc
                if acc:
                    out[((beta, j),) + rest] = acc
        return out

    def computed(self) -> List[Tuple[int, int]]:
        return sorted(self._cache)


@lru_cache(maxsize=None)
def _pair_product(beta, b0, k0, b1, k1, order, slack) -> LaurentLocal:
    """``(q-b0)^-k0`` times the pulled-back ``(1/q-b1)^-k1`` term, through ``w^order``."""
    e0 = _basis_q(beta, b0, k0, order + slack)
    e1 = _basis_sigma(beta, b1, k1, order + slack)
    return e0.mul(e1, order)


# -- Galois antisymmetry --------------------------------------------------

def galois_check(form: OmegaForm, curve: SpectralCurveData) -> bool:
    """
    ``omega(z, .)/dx(z) + omega(1/z, .)/dx(1/z) = 0`` in the first leg, for every
    polar configuration of the remaining legs.
    """
    if 2 * form.g - 2 + form.n <= 0:
        raise UnstableTopologyError("the antisymmetry holds for stable forms only")
    inv_dx = curve.inverse_dxdz_hat()
    for rest in form.rest_keys(0):
        f = form.leg_function(rest, 0)
        lhs = f * inv_dx
        if not (lhs + lhs.involute()).is_zero():
            return False
    return True


# -- pole orders ----------------------------------------------------------

def pole_order_bounds(g: int, n: int, curve: SpectralCurveData) -> Dict[int, int]:
    """
    Maximal pole order of ``omega_{g,n}`` in any leg at each ramification point:
    ``6g - 4 + 2n`` at regular points, ``2g`` at ``z = -1`` on the bipartite curve,
    where ``y`` has a simple pole.
    """
    regular = 6 * g - 4 + 2 * n
    return {1: regular, -1: 2 * g if curve.is_bipartite else regular}


def pole_order_check(form: OmegaForm, curve: SpectralCurveData) -> Dict[int, Tuple[int, int]]:
    """``{beta: (observed, bound)}`` over all legs."""
    bounds = pole_order_bounds(form.g, form.n, curve)
    return {b: (form.max_order(b), bounds[b]) for b in curve.ramification_points}
