# # Digroups of l-maps
#
# Fix a group G of permutations of Γ and a homomorphism θ from G into the
# permutations of Δ. The l-map l[s; f] sends every point (k, i) of Δ × Γ to
# (s, f(i)). The two products are
#
#     l[s; f] ⇀ l[t; g] = l[s; fg]
#     l[s; f] ↼ l[t; g] = l[θ(f)(t); fg]

from collections import Counter

from digroups import core
from digroups.perms import Permutation
from digroups.transform import (
    LMap,
    analyze_formulaic,
    build,
    inverse_formulas,
    lmap_apply,
    spec_from_generators,
    spec_matrix,
    subdigroup_specs,
)

# ## S3 acting on two points through the sign

t = Permutation.from_cycles(3, "(0 1)")
r = Permutation.from_cycles(3, "(0 1 2)")
swap = Permutation((1, 0))
spec = spec_from_generators(3, 2, [t, r], [swap, Permutation.identity(2)])
B = build(spec)
D = B.digroup
print("order", D.n, "halo", D.halo, "identities", core.identities(D))

x = LMap(1, t)
print(x, "sends (0, 2) to", lmap_apply(x, (0, 2)))

# ## Closed-form structure versus table scans
#
# The halo, the identities and both centers can be read off from G and θ
# alone. Here both routes are computed side by side.

report = analyze_formulaic(spec)
c = core.centers(D)
print(report.indices(spec))
print({"halo": D.halo, "identities": core.identities(D),
       "target_center": c.target, "source_center": c.source})

# Inverses from the formula, checked against a scan of the tables.

e = spec.index(spec.bar_unit)
for y in B.lmaps[:4]:
    pair = inverse_formulas(spec, y)
    scan = core.inverses(D, spec.index(y), e)
    print(y, "->", pair.left_inv, pair.right_inv, "scan:", B[scan.left_inv], B[scan.right_inv])

# ## Subdigroups come in blocks
#
# Every subdigroup is Ω × H for a subgroup H and a nonempty Ω that θ(H)
# maps onto itself.

blocks = subdigroup_specs(spec)
print(len(blocks), "blocks;", len(core.all_subdigroups(D)), "subdigroups by brute force")
for sub in blocks:
    print(sorted(sub.omega), "x subgroup of order", len(sub.H))

# ## The whole small matrix
#
# Every G ≤ Sym(Γ) and θ into Sym(Δ) with |Γ|, |Δ| ≤ 3.

specs = list(spec_matrix(3, 3))
orders = Counter(s.order for s in specs)
print(len(specs), "specs; orders:", dict(sorted(orders.items())))
print("all valid:", all(build(s).digroup.n == s.order for s in specs))
