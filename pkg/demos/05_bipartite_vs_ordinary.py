"""
Bipartite against ordinary counts
=================================

At genus 0 every even-faced map is bipartite, so the two tables differ
only by the 2^(n-1) choices of root colour.  At higher genus the bipartite
maps are a proper subset.
"""

from trmaps import TopologicalRecursion, WeightConfig, build_curve, counts

cfg = WeightConfig((4,), 3)
bip = TopologicalRecursion(build_curve("bipartite", cfg))
ordn = TopologicalRecursion(build_curve("ordinary", cfg))

for ls in [(1,), (1, 1), (1, 2), (1, 1, 1), (2, 2, 1)]:
    b = counts(bip, 0, ls).value
    o = counts(ordn, 0, ls).value
    print("genus 0 lengths", [2 * l for l in ls], " bipartite", b, "| ordinary", o,
          "| factor ok:", b * 2 ** (len(ls) - 1) == o)

for g in (1, 2):
    b = counts(bip, g, [2]).value
    o = counts(ordn, g, [2]).value
    print("genus %d length 4:  bipartite %s  | ordinary %s" % (g, b, o))
