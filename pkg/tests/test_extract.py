import json

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from conftest import engine
from trmaps.coeff_ring import WeightConfig
from trmaps.extract import (CATALAN, InsufficientTruncationError, admissible, compare_omega11, counts,
                            counts_cylinder, counts_disk, counts_stable, leg_residue, min_admissible_degree,
                            reference_omega11, require_horizon, vertex_count)
from trmaps.gluing import count_maps, count_series
from trmaps.tr_engine import UnstableTopologyError

# (model, genus, boundary lengths, weight, highest exponent); perimeters stay <= 14
GLUING_CASES = [
    ("bipartite", 0, [2], 4, 3),
    ("ordinary", 0, [2], 4, 3),
    ("bipartite", 1, [2], 4, 3),
    ("ordinary", 1, [2], 4, 3),
    ("ordinary", 2, [2], 4, 3),
    ("bipartite", 0, [2, 2], 4, 2),
    ("ordinary", 0, [2, 2], 4, 2),
    ("ordinary", 0, [2, 4], 4, 2),
    ("bipartite", 0, [2, 4], 4, 2),
    ("bipartite", 1, [4], 4, 2),
    ("ordinary", 1, [4], 4, 2),
    ("bipartite", 0, [2, 2, 2], 4, 1),
    ("ordinary", 0, [2, 2, 2], 4, 1),
    ("bipartite", 1, [2, 2], 4, 2),
    ("ordinary", 1, [2, 2], 4, 2),
    ("bipartite", 0, [2], 6, 2),
    ("ordinary", 0, [2], 6, 2),
    ("ordinary", 1, [4], 6, 1),
    ("ordinary", 0, [2], 2, 4),
    ("bipartite", 0, [4], 2, 3),
    ("ordinary", 1, [2], 2, 4),
]


@pytest.mark.parametrize("model,g,lengths,weight,top", GLUING_CASES)
def test_counts_match_gluing_oracle(model, g, lengths, weight, top):
    tr = engine(model, (weight,), top)
    got = counts(tr, g, [l // 2 for l in lengths]).series()
    ref = count_series(lengths, g, weight, top, bipartite=(model == "bipartite"))
    assert got == ref


@pytest.mark.parametrize("model,g,length", [
    ("ordinary", 1, 8), ("ordinary", 2, 8), ("ordinary", 1, 10), ("bipartite", 1, 8), ("bipartite", 2, 10),
])
def test_one_face_counts_at_t0(model, g, length):
    got = counts(engine(model), g, [length // 2]).value.constant_term
    assert got == count_maps([length], g, bipartite=(model == "bipartite"))


def test_harer_zagier_known_values():
    tr = engine("ordinary")
    assert [counts(tr, 1, [l]).value.constant_term for l in (2, 3, 4, 5)] == [1, 10, 70, 420]
    assert [counts(tr, 2, [l]).value.constant_term for l in (4, 5)] == [21, 483]


def test_disk_catalan():
    tr = engine("bipartite")
    assert [counts_disk(tr, l).value.constant_term for l in range(1, 6)] == list(CATALAN)
    assert CATALAN == (1, 2, 5, 14, 42)


def test_cylinder_two_digons():
    assert counts_cylinder(engine("bipartite"), 1, 1).value.constant_term == 1
    assert counts_cylinder(engine("ordinary"), 1, 1).value.constant_term == 2
    assert count_maps([2, 2], 0, bipartite=True) == 1


def test_cylinder_kernel_identity():
    """``B/(dz1 dz2) - x'(z1) x'(z2) / (x(z1) - x(z2))^2 = 1/(z1 z2 - 1)^2`` for both shapes of x."""
    z1, z2 = sp.symbols("z1 z2")
    for x in (lambda z: z + 1 / z + 2, lambda z: z + 1 / z):
        w2 = 1 / (z1 - z2) ** 2 - sp.diff(x(z1), z1) * sp.diff(x(z2), z2) / (x(z1) - x(z2)) ** 2
        assert sp.cancel(w2 - 1 / (z1 * z2 - 1) ** 2) == 0


def test_leg_residue_against_sympy():
    z = sp.symbols("z")
    for gp, X in ((0, (1 + z) ** 2 / z), (1, (1 + z ** 2) ** 2 / z ** 2)):
        for b in (1, -1):
            for k in range(1, 6):
                for l in range(1, 4):
                    ref = -sp.residue((X ** l / (z - b) ** k).subs(z, 1 / z) / z ** 2, z, 0)
                    got = leg_residue(gp, b, k, l)
                    assert sp.Rational(got.numerator, got.denominator) == ref


def test_unstable_dispatch():
    tr = engine("bipartite")
    with pytest.raises(UnstableTopologyError):
        counts_stable(tr, 0, [1])
    assert counts(tr, 0, [2]).value.constant_term == 2
    with pytest.raises(ValueError):
        counts(tr, 1, [0])


def test_support_constraint():
    cfg = WeightConfig((4,), 5)
    assert vertex_count("ordinary", 2, [1], (2,), cfg) == 0
    assert not admissible("ordinary", 2, [1], (2,), cfg)
    assert admissible("ordinary", 2, [1], (3,), cfg)
    assert min_admissible_degree("bipartite", 2, [1], cfg) == 4
    assert min_admissible_degree("ordinary", 2, [1], cfg) == 3
    with pytest.raises(InsufficientTruncationError):
        require_horizon("bipartite", 2, [1], WeightConfig((4,), 3))
    require_horizon("bipartite", 2, [1], cfg)


@given(st.sampled_from(["bipartite", "ordinary"]),
       st.lists(st.sampled_from([2, 4, 6]), min_size=1, max_size=2, unique=True),
       st.sampled_from([(0, (1,)), (0, (2,)), (0, (1, 1)), (0, (1, 2)), (1, (1,)), (1, (2,)), (0, (1, 1, 1)),
                        (1, (1, 1)), (2, (1,))]))
def test_counts_integral_and_supported(model, weights, table):
    weights = tuple(sorted(weights))
    cfg = WeightConfig(weights, 2)
    tr = engine(model, weights, 2)
    g, ls = table
    value = counts(tr, g, ls).value
    for e, c in value.items():
        assert c.denominator == 1 and c > 0
        assert admissible(model, g, ls, e, cfg)


def test_count_table_json():
    t = counts(engine("bipartite", (4,), 5), 2, [1])
    doc = t.to_json()
    assert doc["lengths"] == [2] and doc["weights"] == ["t4"] and doc["trunc"] == 5
    assert [(s["exponents"], s["coefficient"]) for s in doc["series"]] == [([4], "21"), ([5], "966")]
    json.dumps(doc)


def test_reference_omega11_relation():
    flat = compare_omega11(engine("bipartite"))
    assert flat[(-1, 2)]["status"] == "equal"
    assert all(flat[(1, k)]["status"] == "negated" for k in (2, 3, 4))
    quartic = engine("bipartite", (4,), 3)
    literal = compare_omega11(quartic, "derivative")
    assert literal[(-1, 2)]["status"] == "differs"
    residue = compare_omega11(quartic, "residue")
    assert residue[(-1, 2)]["status"] == "equal"
    assert all(residue[(1, k)]["status"] == "negated" for k in (2, 3, 4))
    with pytest.raises(ValueError):
        reference_omega11(engine("ordinary").curve)


def test_ordinary_genus2_quartic_column_is_shifted_in_print():
    """The reference genus-2 ordinary column equals the computed one moved up by one power of t4."""
    from trmaps.extract import QUARTIC_TABLE
    tr = engine("ordinary", (4,), 6)
    got = counts(tr, 2, [1]).series()
    assert got == [0, 0, 0, 45, 2007, 56646, 1290087]
    assert list(QUARTIC_TABLE[("ordinary", 2)]) == got[1:]
    # Euler: a genus-2 map with one digon boundary and m quadrangles has m - 2 vertices
    assert count_series([2], 2, 4, 3) == [0, 0, 0, 45]
