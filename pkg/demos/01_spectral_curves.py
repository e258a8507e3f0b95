"""
Spectral curves of the three map models
=======================================

Build the ordinary, bipartite and dessins curves and check the identities
that tie the bipartite curve to the ordinary one.
"""

from trmaps import WeightConfig, build_curve, check_curve_relations

# quadrangulations only, truncated at total degree 4
cfg = WeightConfig((4,), 4)

bip = build_curve("bipartite", cfg)
ordn = build_curve("ordinary", cfg)
print("gamma^2        =", bip.gamma_sq)
print("u_1 / gamma    =", bip.u_hat[0])
print("u_3 / gamma    =", bip.u_hat[1])

# the bipartite x is gamma^2 (z + 1/z + 2): branch points 4 gamma^2 and 0
print("branch points  =", bip.branch_points)

# y has a simple pole at z = -1, a ramification point: the curve is irregular there
print("pole of y at -1:", bip.y_hat.pole_order(-1))

# dessins are the bipartite curve with every weight switched off
des = build_curve("dessins")
print("dessins x =", des.x_hat, " y =", des.y_hat)

# x_bip(z^2) = x_ord(z)^2 and friends, all checked exactly
for name, row in check_curve_relations(ordn, bip).items():
    print("%-40s %s" % (name, "ok" if row["ok"] else "FAILED"))
