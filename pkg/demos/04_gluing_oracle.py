"""
Counting maps by gluing polygons
================================

An independent check of the recursion: enumerate all side pairings of a
set of polygons, keep the connected surfaces of the right genus and
compare with the extracted counts.
"""

from trmaps import TopologicalRecursion, WeightConfig, build_curve, counts
from trmaps.gluing import count_maps, count_series, harer_zagier

# one-face maps: Harer-Zagier numbers
print("genus 1, 2n-gon:", [harer_zagier(1, n) for n in range(2, 6)])
print("genus 2, 2n-gon:", [harer_zagier(2, n) for n in range(4, 6)])

# two digons glued into a sphere; bipartite roots must start at white vertices
print("cylinder (2,2): ordinary", count_maps([2, 2], 0), " bipartite", count_maps([2, 2], 0, bipartite=True))

# torus maps with a digon boundary and up to three quadrangles
for model in ("bipartite", "ordinary"):
    tr = TopologicalRecursion(build_curve(model, WeightConfig((4,), 3)))
    from_tr = counts(tr, 1, [1]).series()
    from_gluing = count_series([2], 1, 4, 3, bipartite=(model == "bipartite"))
    print(model, "recursion", from_tr, " gluing", from_gluing)

# genus 2 with one digon: Euler forces at least three quadrangles
print("ordinary genus 2, digon + m quadrangles:", count_series([2], 2, 4, 3))
