"""
Spectral curves for ordinary maps, bipartite maps and dessins d'enfant.

All three live on the Riemann sphere with the Zhukovsky covering, simple
ramification points at ``z = +1, -1`` and global involution ``z -> 1/z``:

* ordinary:   x = gamma (z + 1/z),           y = sum_k u_{2k+1} z^{2k+1}
* bipartite:  x = gamma^2 (z + 1/z) + 2 gamma^2,
              y = sum_k u_{2k+1} z^{k+1} / (gamma (1 + z))
* dessins:    the bipartite curve with every weight switched off,
              x = z + 1/z + 2, y = z / (1 + z)

``gamma^2`` solves ``gamma^2 = 1 + sum_k t_2k C(2k-1, k) gamma^(2k)``.

Odd powers of ``gamma`` are never materialised.  The u-coefficients are
stored as ``u_{2k+1} / gamma`` (a series in gamma^2), and for the ordinary
model ``x`` and ``y`` are stored divided by ``gamma`` (``gamma_power = 1``):
every quantity the recursion consumes (``y dx``, the kernel denominator,
``x^2``) is even in gamma and is built from the stored halves.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Tuple

from .coeff_ring import WeightConfig, WeightSeries
from .zfun import ZRational

MODELS = ("ordinary", "bipartite", "dessins")


class CurveError(ValueError):
    """Invalid model or weight combination."""


def solve_gamma_sq(cfg: WeightConfig) -> WeightSeries:
    """Fixed point of ``G = 1 + sum_k t_2k C(2k-1, k) G^k`` with constant term 1."""
    one = WeightSeries.one(cfg)
    gsq = one
    # each pass fixes at least one more total degree
    for _ in range(cfg.order + 1):
        nxt = one
        for w in cfg.weights:
            k = w // 2
            nxt = nxt + WeightSeries.variable(cfg, w) * comb(2 * k - 1, k) * gsq ** k
        if nxt == gsq:
            break
        gsq = nxt
    return gsq


def compute_u(cfg: WeightConfig, gamma_sq: WeightSeries) -> List[WeightSeries]:
    """``[u_1/gamma, u_3/gamma, ..., u_{2d-1}/gamma]``, each a series in gamma^2."""
    d = cfg.max_half_degree
    out = []
    for k in range(d):
        acc = WeightSeries.constant(cfg, 1 if k == 0 else 0)
        for w in cfg.weights:
            j = w // 2
            if j >= k + 1:
                acc = acc - WeightSeries.variable(cfg, w) * comb(2 * j - 1, j + k) * gamma_sq ** (j - 1)
        out.append(acc)
    return out


@dataclass
class SpectralCurveData:
    """
    One spectral curve over a weight configuration.

    ``x = gamma^gamma_power * x_hat`` and likewise for ``y``; for the
    bipartite and dessins models ``gamma_power`` is 0 and the hats are the
    curve itself.
    """

    model: str
    config: WeightConfig
    gamma_sq: WeightSeries
    u_hat: List[WeightSeries]
    x_hat: ZRational
    y_hat: ZRational
    gamma_power: int
    ramification_points: Tuple[int, int] = (1, -1)
    _cache: Dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def is_bipartite(self) -> bool:
        return self.model in ("bipartite", "dessins")

    @property
    def dxdz_hat(self) -> ZRational:
        return self.x_hat.derivative()

    @property
    def scale_sq(self) -> WeightSeries:
        """``gamma^(2 gamma_power)``: the factor relating ``y dx`` to ``y_hat dx_hat``."""
        return self.gamma_sq ** self.gamma_power

    @property
    def omega01(self) -> ZRational:
        """Coefficient of dz in ``y dx``."""
        if "omega01" not in self._cache:
            self._cache["omega01"] = self.y_hat * self.dxdz_hat * self.scale_sq
        return self._cache["omega01"]

    @property
    def kernel_denominator(self) -> ZRational:
        """``(y(q) - y(1/q)) dx/dq``: the dq-coefficient of ``omega01(q) - omega01(1/q)``."""
        if "kden" not in self._cache:
            self._cache["kden"] = (self.y_hat - self.y_hat.involute()) * self.dxdz_hat * self.scale_sq
        return self._cache["kden"]

    @property
    def extraction_x(self) -> ZRational:
        """The function whose l-th power extracts boundary length 2l: ``x`` (bipartite) or ``x^2`` (ordinary)."""
        if "xext" not in self._cache:
            if self.gamma_power == 0:
                self._cache["xext"] = self.x_hat
            else:
                self._cache["xext"] = self.x_hat * self.x_hat * self.gamma_sq
        return self._cache["xext"]

    @property
    def branch_points(self) -> Tuple[WeightSeries, WeightSeries]:
        """``(x(+1), x(-1))`` divided by ``gamma^gamma_power``."""
        return self.x_hat.value_at(1), self.x_hat.value_at(-1)

    def inverse_dxdz_hat(self) -> ZRational:
        """``1 / (dx_hat/dz)``; ``dx_hat/dz = c (z^2 - 1) / z^2`` with ``c`` a unit."""
        c = self.gamma_sq if self.gamma_power == 0 else WeightSeries.one(self.config)
        return ZRational([Fraction(0), Fraction(0), c.inverse()], 0, 1, 1)

    def __str__(self):
        scale = "" if self.gamma_power == 0 else "gamma*"
        return "%s curve over %s: x = %s(%s), y = %s(%s), gamma^2 = %s" % (
            self.model, self.config, scale, self.x_hat, scale, self.y_hat, self.gamma_sq)


def _ring_const(cfg, c):
    return WeightSeries.constant(cfg, c)


def build_curve(model: str, cfg: WeightConfig | None = None) -> SpectralCurveData:
    if model not in MODELS:
        raise CurveError("unknown model %r (expected one of %s)" % (model, ", ".join(MODELS)))
    if cfg is None:
        cfg = WeightConfig()
    if model == "dessins":
        if cfg.weights:
            raise CurveError("the dessins curve has no face weights; use the bipartite model instead")
    gsq = solve_gamma_sq(cfg)
    u_hat = compute_u(cfg, gsq)
    zero = _ring_const(cfg, 0)
    if model == "ordinary":
        x_hat = ZRational.laurent({1: _ring_const(cfg, 1), -1: _ring_const(cfg, 1)})
        y_hat = ZRational.laurent({2 * k + 1: u for k, u in enumerate(u_hat)} or {0: zero})
        power = 1
    else:
        x_hat = ZRational.laurent({1: gsq, 0: gsq * 2, -1: gsq})
        num = [zero] + list(u_hat)
        y_hat = ZRational(num, q=1)
        power = 0
    return SpectralCurveData(model, cfg, gsq, u_hat, x_hat, y_hat, power)


# -- identity checks ------------------------------------------------------

def gamma_sq_closed_form_t4(cfg: WeightConfig) -> WeightSeries:
    """``(1 - sqrt(1 - 12 t4)) / (6 t4)`` for the quartic-only model, via ``sqrt``."""
    if cfg.weights != (4,):
        raise CurveError("closed form is for t4 only")
    # numerator has zero constant term; divide by t4 by shifting exponents
    big = WeightConfig((4,), cfg.order + 1)
    t = WeightSeries.variable(big, 4)
    num = 1 - (1 - 12 * t).sqrt()
    terms = {(k - 1,): c / 6 for (k,), c in num.items() if k >= 1}
    return WeightSeries(cfg, terms)


def check_curve_relations(ordc: SpectralCurveData, bip: SpectralCurveData) -> Dict[str, Dict]:
    """
    Exact checks of the relations tying the two curves together.

    Returns ``{name: {"ok": bool, "detail": str}}``.
    """
    if ordc.config != bip.config:
        raise CurveError("curves built over different weight configurations")
    if ordc.model != "ordinary" or not bip.is_bipartite:
        raise CurveError("expected an ordinary and a bipartite curve")
    cfg = bip.config
    gsq = bip.gamma_sq
    report = {}

    def record(name, lhs, rhs):
        ok = lhs == rhs
        report[name] = {"ok": ok, "detail": "" if ok else "lhs = %s\nrhs = %s" % (lhs, rhs)}

    # x_bip(z^2) = x_ord(z)^2 = gamma^2 x_hat^2
    record("x_bip(z^2) = x_ord(z)^2", bip.x_hat.substitute_square(), ordc.x_hat * ordc.x_hat * gsq)

    # y_bip(z^2) x_ord(z) = y_ord(z); with y_bip = P(z)/(1+z) and the common gamma dropped:
    # P(z^2) x_hat_ord(z) = y_hat_ord(z) (1 + z^2)
    P = bip.y_hat * ZRational([1, 1])
    one_plus_z2 = ZRational.laurent({0: 1, 2: 1})
    record("y_bip(z^2) x_ord(z) = y_ord(z)", P.substitute_square() * ordc.x_hat, ordc.y_hat * one_plus_z2)

    # y x = 1 + z - (1+z) sum_{k=1}^{d-1} sum_{j>=k+1} t_2j C(2j-1, j+k) gamma^{2j} z^k
    d = cfg.max_half_degree
    inner = {}
    for k in range(1, d):
        acc = WeightSeries.zero(cfg)
        for w in cfg.weights:
            j = w // 2
            if j >= k + 1:
                acc = acc + WeightSeries.variable(cfg, w) * comb(2 * j - 1, j + k) * gsq ** j
        inner[k] = acc
    rhs = ZRational([1, 1]) - ZRational([1, 1]) * ZRational.laurent(inner or {0: WeightSeries.zero(cfg)})
    record("y_bip x_bip polynomial form", bip.y_hat * bip.x_hat, rhs)

    # Y(z) x_bip(z) with Y = y(1/z) - y(z), against the two-sided closed form
    Y = bip.y_hat.involute() - bip.y_hat
    bracket = {0: WeightSeries.constant(cfg, 2)}
    for w in cfg.weights:
        k = w // 2
        tw = WeightSeries.variable(cfg, w) * gsq ** k
        for l in range(1, k):
            bracket[l] = bracket.get(l, WeightSeries.zero(cfg)) - tw * comb(2 * k - 1, k + l)
        for l in range(-k, 1):
            bracket[l] = bracket.get(l, WeightSeries.zero(cfg)) + tw * comb(2 * k - 1, k + l)
    closed = ZRational.laurent({-1: gsq, 0: gsq * 2, 1: gsq}) - ZRational([1, 1]) * ZRational.laurent(bracket)
    record("Y x_bip closed form", Y * bip.x_hat, closed)

    # branch points and the Zhukovsky square-root identity
    a_pt, b_pt = bip.branch_points
    record("x_bip(+1) = 4 gamma^2", a_pt, gsq * 4)
    record("x_bip(-1) = 0", b_pt, WeightSeries.zero(cfg))
    zmz = ZRational.laurent({1: 1, -1: -1})
    record("(x-a)(x-b) = gamma^4 (z - 1/z)^2",
           (bip.x_hat - a_pt) * (bip.x_hat - b_pt), zmz * zmz * gsq * gsq)

    # gamma^2: fixed point re-substitutes to itself; closed form for t4
    refix = WeightSeries.one(cfg)
    for w in cfg.weights:
        k = w // 2
        refix = refix + WeightSeries.variable(cfg, w) * comb(2 * k - 1, k) * gsq ** k
    record("gamma^2 fixed point", refix, gsq)
    if cfg.weights == (4,):
        record("gamma^2 closed form (t4)", gamma_sq_closed_form_t4(cfg), gsq)

    # omega_{0,1} regular at the ramification points; y_bip has a simple pole at -1
    for c in (1, -1):
        o = bip.omega01
        report["omega01_bip regular at %+d" % c] = {"ok": o.is_zero() or o.pole_order(c) <= 0, "detail": ""}
        o = ordc.omega01
        report["omega01_ord regular at %+d" % c] = {"ok": o.is_zero() or o.pole_order(c) <= 0, "detail": ""}
    for model, curve in (("bip", bip), ("ord", ordc)):
        dx = curve.dxdz_hat
        report["dx_%s simple zeros at +-1" % model] = {
            "ok": dx.pole_order(1) == -1 and dx.pole_order(-1) == -1, "detail": ""}
    return report
