"""
Correlators in partial fractions
================================

omega_{g,n} is stored as a combination of dz_i / (z_i -+ 1)^k.  This demo
prints a few of them and checks the structural properties.
"""

from trmaps import TopologicalRecursion, WeightConfig, build_curve, galois_check
from trmaps.tr_engine import pole_order_check

# at t = 0 the ordinary omega_{1,1} is z^3 dz / (z^2 - 1)^4
ordinary = TopologicalRecursion(build_curve("ordinary"))
print(ordinary.omega(1, 1))

# the bipartite one has only a double pole at the irregular point z = -1
bipartite = TopologicalRecursion(build_curve("bipartite"))
print(bipartite.omega(1, 1))

# switch on quadrangles: coefficients become truncated series in t4
quartic = TopologicalRecursion(build_curve("bipartite", WeightConfig((4,), 2)))
print(quartic.omega(1, 1))

# pole orders: 6g - 4 + 2n at +1, but only 2g at -1
for g, n in [(0, 3), (1, 1), (1, 2), (2, 1), (2, 2)]:
    form = quartic.omega(g, n)
    print((g, n), "symmetric:", form.is_symmetric(), " galois:", galois_check(form, quartic.curve),
          " pole orders (seen, bound):", pole_order_check(form, quartic.curve))
