# # Digroups from their tables
#
# A digroup is a set with two products, written here as ``lp`` (left, ⇀) and
# ``rp`` (right, ↼). This walk-through builds a few small ones from raw tables
# and looks at their bar-units, inverses and centers.

import numpy as np

from digroups import core
from digroups.transform import build, ex4_spec

# ## A group is a digroup with both products equal

c3 = [[(a + b) % 3 for b in range(3)] for a in range(3)]
C3 = core.Digroup(c3, c3)
print("C3 halo:", C3.halo, "identities:", core.identities(C3))

# ## Projections: every element is a bar-unit
#
# With x ⇀ y = x and x ↼ y = y the axioms hold trivially and every element
# acts as a one-sided unit.

P3 = core.projection_digroup(3)
print(P3.left)
print(P3.right)
print("P3 halo:", P3.halo)

# ## Mixing tables breaks the axioms
#
# The left table of C2 with the right table of P2 is not a digroup. The report
# names the first failing law and a witness triple.

xor = np.array([[0, 1], [1, 0]])
proj_right = np.array([[0, 1], [0, 1]])
report = core.validate_digroup(xor, proj_right)
print(report.valid, report.violations[:3])

# ## A digroup with two bar-units and no identity
#
# This order-4 example comes from the transformation construction (demo 02).
# Its labels spell out the l-map behind each element.

D = build(ex4_spec()).digroup
for k in range(D.n):
    print(k, D.label(k))
print("left\n", D.left)
print("right\n", D.right)
print("halo:", D.halo, "identities:", core.identities(D))

# Inverses depend on the chosen bar-unit.

for e in D.halo:
    for x in range(D.n):
        pair = core.inverses(D, x, e)
        print(f"bar-unit {e}: x={x} left inverse {pair.left_inv}, right inverse {pair.right_inv}")

# Centers and subdigroups.

print(core.centers(D))
print("subdigroups:", core.all_subdigroups(D))

# ## Relabeling and isomorphism

E = core.relabel(D, [2, 3, 0, 1])
phi = core.find_isomorphism(D, E)
print("isomorphism:", phi, core.is_isomorphism(D, E, phi))
