"""
Rooted quadrangulations of genus 0, 1 and 2
===========================================

Count bipartite and ordinary maps with one boundary of length 2 and
quadrangular inner faces, up to t4^5.
"""

import time

from trmaps import TopologicalRecursion, WeightConfig, build_curve, counts
from trmaps.extract import QUARTIC_TABLE

cfg = WeightConfig((4,), 5)
start = time.perf_counter()
engines = {m: TopologicalRecursion(build_curve(m, cfg)) for m in ("bipartite", "ordinary")}

columns = {}
for model in ("bipartite", "ordinary"):
    for g in (0, 1, 2):
        columns[(model, g)] = counts(engines[model], g, [1]).series()
print("computed in %.2fs" % (time.perf_counter() - start))

header = "power " + " ".join("%10s" % ("%s g%d" % (m[:3], g)) for m, g in columns)
print(header)
for p in range(6):
    print("t4^%d  " % p + " ".join("%10d" % col[p] for col in columns.values()))

# compare with the reference table
for key, col in columns.items():
    if list(QUARTIC_TABLE[key]) != col:
        print("differs from the reference column", key, ":", list(QUARTIC_TABLE[key]))

# the ordinary genus-2 column is the reference one moved down by a row;
# one more order shows the last reference entry
bigger = TopologicalRecursion(build_curve("ordinary", WeightConfig((4,), 6)))
print("ordinary g=2 to t4^6:", counts(bigger, 2, [1]).series())
