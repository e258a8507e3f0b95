"""
Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line; the lines are printed in the
terminal summary (and inline with ``-s``).  Criteria are checked at their
stated tolerance: all comparisons are exact.
"""
import time
from itertools import combinations_with_replacement

from hypothesis import given, settings, strategies as st

from conftest import engine
from trmaps.coeff_ring import WeightConfig
from trmaps.curve import build_curve, check_curve_relations
from trmaps.extract import (A006300, A006301, CATALAN, QUARTIC_TABLE, compare_omega11, counts, reference_omega11)
from trmaps.gluing import count_maps, harer_zagier
from trmaps.tr_engine import galois_check, pole_order_check

LINES = {}


def record(number, ok, text):
    line = "criterion %d: %s  %s" % (number, "PASS" if ok else "FAIL", text)
    LINES[number] = line
    print(line)
    return ok


def test_criterion_1_quartic_table_reproduction():
    start = time.perf_counter()
    bip = engine("bipartite", (4,), 5)
    ordn = engine("ordinary", (4,), 5)
    tr = {"bipartite": bip, "ordinary": ordn}
    mismatches = []
    for (model, g), expected in sorted(QUARTIC_TABLE.items()):
        got = counts(tr[model], g, [1]).series()
        for power, (e, c) in enumerate(zip(expected, got)):
            if e != c:
                mismatches.append("%s g=%d t4^%d: reference %d, computed %d" % (model, g, power, e, c))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60
    text = "quartic table, 36 entries, %d mismatched, %.1fs" % (len(mismatches), elapsed)
    if mismatches:
        text += " [" + "; ".join(mismatches) + "]"
    record(1, ok, text)
    assert elapsed < 60
    assert not mismatches, "\n".join(mismatches)


def test_criterion_2_oeis_prefixes():
    bip = engine("bipartite", (4,), 5)
    g1 = tuple(c for c in counts(bip, 1, [1]).series() if c)
    g2 = tuple(c for c in counts(bip, 2, [1]).series() if c)
    ok = g1 == A006300 and g2 == A006301
    record(2, ok, "A006300 prefix %s, A006301 prefix %s" % (list(g1), list(g2)))
    assert g1 == (1, 20, 307, 4280)
    assert g2 == (21, 966)


def test_criterion_3_unstable_anchors():
    bip = engine("bipartite")
    ordn = engine("ordinary")
    disks = [int(counts(bip, 0, [l]).value.constant_term) for l in range(1, 6)]
    cyl = int(counts(bip, 0, [1, 1]).value.constant_term)
    cyl_oracle = count_maps([2, 2], 0, bipartite=True)
    hz = [int(counts(ordn, 1, [l]).value.constant_term) for l in (2, 3)]
    hz_oracle = [harer_zagier(1, 2), harer_zagier(1, 3)]
    ok = disks == list(CATALAN) and cyl == cyl_oracle and hz == hz_oracle == [1, 10]
    record(3, ok, "disks %s, cylinder %s (oracle %s), Harer-Zagier %s (oracle %s)"
           % (disks, cyl, cyl_oracle, hz, hz_oracle))
    assert disks == [1, 2, 5, 14, 42]
    assert cyl == cyl_oracle
    assert hz == hz_oracle == [1, 10]


STABLE_UP_TO_4 = [(g, n) for g in range(3) for n in range(1, 7) if 0 < 2 * g - 2 + n <= 4]


def _structure_failures(tr, topologies):
    bad = []
    for g, n in topologies:
        form = tr.omega(g, n)
        if not form.is_symmetric():
            bad.append("%s (%d,%d) symmetry" % (tr.curve.model, g, n))
        if not galois_check(form, tr.curve):
            bad.append("%s (%d,%d) galois" % (tr.curve.model, g, n))
        if not form.residue_free():
            bad.append("%s (%d,%d) residue" % (tr.curve.model, g, n))
        for beta, (seen, bound) in pole_order_check(form, tr.curve).items():
            if seen > bound:
                bad.append("%s (%d,%d) pole order %d > %d at %+d" % (tr.curve.model, g, n, seen, bound, beta))
    return bad


@settings(max_examples=12, deadline=None)
@given(st.lists(st.sampled_from([2, 4, 6]), max_size=2, unique=True), st.integers(0, 2),
       st.sampled_from([gn for gn in STABLE_UP_TO_4 if 2 * gn[0] - 2 + gn[1] <= 3]))
def _structure_property(weights, order, gn):
    for model in ("bipartite", "ordinary"):
        tr = engine(model, tuple(sorted(weights)), order)
        assert not _structure_failures(tr, [gn])


def test_criterion_4_structural_invariants():
    bad = []
    for model in ("bipartite", "ordinary"):
        bad += _structure_failures(engine(model, (4,), 3), STABLE_UP_TO_4)
    bip = engine("bipartite", (4,), 3)
    attained = pole_order_check(bip.omega(1, 1), bip.curve)
    equality = attained[-1] == (2, 2) and attained[1] == (4, 4)
    try:
        _structure_property()
        prop_ok = True
    except AssertionError:
        prop_ok = False
    ok = not bad and equality and prop_ok
    record(4, ok, "%d topologies x 2 models at N=3 (t4), random weight sets; failures %s; (1,1) bound attained %s"
           % (len(STABLE_UP_TO_4), bad or "none", equality))
    assert not bad
    assert equality
    assert prop_ok


@settings(max_examples=6, deadline=None)
@given(st.lists(st.sampled_from([2, 4, 6, 8]), min_size=1, max_size=2, unique=True))
def _curve_property(weights):
    cfg = WeightConfig(tuple(sorted(weights)), 6)
    report = check_curve_relations(build_curve("ordinary", cfg), build_curve("bipartite", cfg))
    assert all(v["ok"] for v in report.values()), [k for k, v in report.items() if not v["ok"]]


def test_criterion_5_curve_identities():
    cfg = WeightConfig((4,), 6)
    report = check_curve_relations(build_curve("ordinary", cfg), build_curve("bipartite", cfg))
    bad = [k for k, v in report.items() if not v["ok"]]
    required = ["x_bip(z^2) = x_ord(z)^2", "y_bip(z^2) x_ord(z) = y_ord(z)", "y_bip x_bip polynomial form",
                "Y x_bip closed form", "x_bip(+1) = 4 gamma^2", "x_bip(-1) = 0", "gamma^2 closed form (t4)"]
    missing = [k for k in required if k not in report]
    try:
        _curve_property()
        prop_ok = True
    except AssertionError:
        prop_ok = False
    ok = not bad and not missing and prop_ok
    record(5, ok, "%d identities at N=6 (t4) plus random weight sets; failures %s"
           % (len(report), bad + missing or "none"))
    assert not bad and not missing and prop_ok


def _genus0_failures(weights, order):
    cfg_b = engine("bipartite", weights, order)
    cfg_o = engine("ordinary", weights, order)
    bad = []
    for n in (1, 2, 3):
        for ls in combinations_with_replacement((1, 2, 3), n):
            tb, to = counts(cfg_b, 0, ls).value, counts(cfg_o, 0, ls).value
            if tb * 2 ** (n - 1) != to:
                bad.append("g=0 %s" % (ls,))
    for g, ns in ((1, (1, 2)), (2, (1,))):
        for n in ns:
            for ls in combinations_with_replacement((1, 2, 3), n):
                tb, to = counts(cfg_b, g, ls).value, counts(cfg_o, g, ls).value
                if any(c > to[e] for e, c in tb.items()):
                    bad.append("g=%d %s" % (g, ls))
    return bad


@settings(max_examples=5, deadline=None)
@given(st.lists(st.sampled_from([2, 4, 6]), max_size=2, unique=True), st.integers(0, 3))
def _genus0_property(weights, order):
    assert not _genus0_failures(tuple(sorted(weights)), min(order, 3 if len(weights) < 2 else 2))


def test_criterion_6_genus0_factor():
    bad = _genus0_failures((4,), 3)
    try:
        _genus0_property()
        prop_ok = True
    except AssertionError:
        prop_ok = False
    ok = not bad and prop_ok
    record(6, ok, "2^(n-1) factor for n<=3, l_i<=3 and T_bip <= T_ord for g=1,2 at N<=3; failures %s"
           % (bad or "none"))
    assert not bad and prop_ok


def test_criterion_7_reference_omega11():
    problems = []
    flat = compare_omega11(engine("bipartite"))
    for pole, row in flat.items():
        if row["status"] == "differs":
            problems.append("t=0 %s magnitude" % (pole,))
    signs = {pole: row["status"] for pole, row in flat.items()}
    quartic = engine("bipartite", (4,), 3)
    engine_poles = {key[0] for key in quartic.omega(1, 1).terms}
    reference = reference_omega11(quartic.curve)
    if engine_poles != set(reference):
        problems.append("pole set %s vs reference %s" % (sorted(engine_poles), sorted(reference)))
    # the normalisation at -1 is not defined unambiguously once weights are on: compare the +1 terms only
    for pole, row in compare_omega11(quartic).items():
        if pole[0] == 1 and row["status"] == "differs":
            problems.append("t4 %s magnitude" % (pole,))
    residue_reading = compare_omega11(quartic, "residue")[(-1, 2)]["status"]
    ok = not problems
    record(7, ok, "locations/orders/magnitudes %s; term signs vs reference %s; t4 term at -1 under the residue "
           "reading: %s" % ("match" if ok else problems, signs, residue_reading))
    assert not problems

