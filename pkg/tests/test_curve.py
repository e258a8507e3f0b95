from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from trmaps.coeff_ring import WeightConfig, WeightSeries
from trmaps.curve import CurveError, build_curve, check_curve_relations, gamma_sq_closed_form_t4, solve_gamma_sq
from trmaps.zfun import ZRational


def lagrange_single(k, n):
    """``[t^n] G`` for ``G = 1 + C(2k-1, k) t G^k`` by Lagrange inversion."""
    if n == 0:
        return Fraction(1)
    a = comb(2 * k - 1, k)
    return Fraction(a ** n * comb(k * n, n - 1), n)


@pytest.mark.parametrize("w", [2, 4, 6, 8])
def test_gamma_sq_lagrange(w):
    cfg = WeightConfig((w,), 6)
    got = solve_gamma_sq(cfg).univariate()
    assert got == [lagrange_single(w // 2, n) for n in range(7)]


def test_gamma_sq_t4_known_prefix():
    cfg = WeightConfig((4,), 4)
    assert solve_gamma_sq(cfg).univariate() == [1, 3, 18, 135, 1134]
    assert gamma_sq_closed_form_t4(cfg) == solve_gamma_sq(cfg)


weight_sets = st.lists(st.sampled_from([2, 4, 6, 8]), min_size=0, max_size=3, unique=True)


@given(weight_sets, st.integers(0, 3))
def test_curve_relations_property(weights, order):
    cfg = WeightConfig(tuple(weights), order)
    report = check_curve_relations(build_curve("ordinary", cfg), build_curve("bipartite", cfg))
    bad = {k: v for k, v in report.items() if not v["ok"]}
    assert not bad


def test_curve_relations_at_order_six():
    for weights in [(), (4,), (4, 6)]:
        cfg = WeightConfig(weights, 6 if len(weights) < 2 else 4)
        report = check_curve_relations(build_curve("ordinary", cfg), build_curve("bipartite", cfg))
        assert all(v["ok"] for v in report.values()), report


def test_dessins_curve():
    c = build_curve("dessins")
    assert c.x_hat == ZRational.laurent({1: Fraction(1), 0: Fraction(2), -1: Fraction(1)})
    assert c.y_hat == ZRational([0, 1], q=1)
    assert c.branch_points == (4, 0)
    with pytest.raises(CurveError):
        build_curve("dessins", WeightConfig((4,), 1))


def test_unknown_model():
    with pytest.raises(CurveError):
        build_curve("triangulations")


def test_bipartite_y_has_simple_pole_at_minus_one():
    c = build_curve("bipartite", WeightConfig((4,), 3))
    assert c.y_hat.pole_order(-1) == 1
    assert c.y_hat.pole_order(1) <= 0
    # the kernel denominator therefore has no zero at -1 but a double zero at +1
    assert c.kernel_denominator.pole_order(-1) == 0
    assert c.kernel_denominator.pole_order(1) == -2


def test_ordinary_hats():
    cfg = WeightConfig((4,), 2)
    c = build_curve("ordinary", cfg)
    t = WeightSeries.variable(cfg, 4)
    g = c.gamma_sq
    assert c.u_hat[0] == 1 - 3 * t * g
    assert c.u_hat[1] == -t * g
    assert c.gamma_power == 1
