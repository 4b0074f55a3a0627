# # Digroups of small order up to isomorphism
#
# Two independent routes. The brute route searches both tables cell by cell.
# The constructive route runs over n = d·m, the groups of order m and every θ
# into Sym(d), then removes duplicates.

import time

import numpy as np

from digroups import core
from digroups.enumeration import brute_enumerate, constructive_enumerate, cross_check

for n in range(1, 5):
    t0 = time.perf_counter()
    report = cross_check(n)
    print(f"order {n}: brute {report.brute_count}, constructive {report.constructive_count}, "
          f"matched {report.matched}  ({time.perf_counter() - t0:.2f} s)")

# ## Counts up to order 10 from the constructive route

counts = []
for n in range(1, 11):
    cat = constructive_enumerate(n)
    counts.append(len(cat))
print(np.array(counts))

# ## What the order-4 classes look like

cat = constructive_enumerate(4)
for D, prov in zip(cat.classes, cat.provenance):
    c = core.centers(D)
    print(f"delta {prov['delta']} x {prov['group']:<4} theta {prov['theta_images']}: "
          f"halo {len(D.halo)}, identities {len(core.identities(D))}, "
          f"centers {len(c.target)}/{len(c.source)}")

# Brute force at order 3 finds the same classes without knowing about groups.

for D in brute_enumerate(3).classes:
    print(D.left.tolist(), D.right.tolist())
