"""Independent sympy reference implementations used as test oracles."""
import sympy as sp

z, q, t, G = sp.symbols("z q t G")   # G stands for gamma^2
z0, z1, z2 = sp.symbols("z0 z1 z2")


def curve_t4(model, with_t=True):
    """``(x, y)`` as sympy expressions in ``z`` for the quartic model, gamma^2 kept symbolic as ``G``."""
    tt = t if with_t else 0
    u1 = 1 - 3 * tt * G
    u3 = -tt * G
    if model == "bipartite":
        x = G * (z + 1 / z + 2)
        y = (u1 * z + u3 * z ** 2) / (1 + z)
    else:
        gam = sp.sqrt(G)
        x = gam * (z + 1 / z)
        y = gam * (u1 * z + u3 * z ** 3)
    if not with_t:
        x, y = x.subs(G, 1), y.subs(G, 1)
    return x, y


def kernel(x, y, sign=-1):
    """``K(z0, q)`` as the coefficient of ``dz0 / dq``."""
    num = sp.Rational(1, 2) * (1 / (z0 - q) - 1 / (z0 - 1 / q))
    den = (y.subs(z, q) - y.subs(z, 1 / q)) * sp.diff(x, z).subs(z, q)
    return sign * num / den


def _b(a, b):
    return 1 / (a - b) ** 2


def _b_sigma(a, b):
    """dq-coefficient of ``B(1/q, b)`` when ``a = q``."""
    return -1 / a ** 2 / (1 / a - b) ** 2


def _res(expr, point):
    """Residue at ``q = point`` via ``d^(k-1)/dq^(k-1) [(q-point)^k f] / (k-1)!``."""
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    den_p = sp.Poly(den, q)
    k = 0
    while den_p.eval(point) == 0:
        den_p = sp.Poly(sp.quo(den_p.as_expr(), q - point, q), q)
        k += 1
    if k == 0:
        return sp.Integer(0)
    g = num / den_p.as_expr()
    return sp.cancel(sp.diff(g, q, k - 1).subs(q, point) / sp.factorial(k - 1))


def omega11(x, y, sign=-1):
    """``omega_{1,1}(z0)`` directly from the residue formula."""
    br = -1 / (q ** 2 - 1) ** 2
    k = kernel(x, y, sign)
    return sp.factor(sum(_res(k * br, b) for b in (1, -1)))


def omega03(x, y, sign=-1):
    br = _b(q, z1) * _b_sigma(q, z2) + _b(q, z2) * _b_sigma(q, z1)
    k = kernel(x, y, sign)
    return sp.factor(sum(_res(k * br, b) for b in (1, -1)))


def series_in_t(expr, gamma_sq_series, order):
    """Expand a rational expression in ``t`` and ``G`` to ``t^order`` after substituting ``G``."""
    e = expr.subs(G, gamma_sq_series)
    s = sp.series(e, t, 0, order + 1).removeO()
    return sp.expand(s)
