# # Every digroup is a digroup of l-maps
#
# Starting from bare tables we recover Γ (the fibers of g ↦ e ⇀ g), the group
# of left translations acting on them, θ acting on the halo, and the map
# λ(α ⇀ f) = l[α; translation by f].

from digroups import core
from digroups.cayley import embed, translation_group
from digroups.formats import format_tds
from digroups.transform import build, ex4_spec

D = build(ex4_spec()).digroup
e = D.halo[0]

P = core.fiber_partition(D, e)
print("fibers:", P.fibers)

T = translation_group(D, e)
for f in range(D.n):
    print(f"translation by {f}:", T[f].cycle_string(), " psi:", core.psi(D, f, e).cycle_string())

for x in range(D.n):
    alpha, f = core.decompose(D, x, e)
    print(f"{x} = {alpha} ⇀ {f}")

# ## The embedding and its evidence

E = embed(D, e)
for x, l in enumerate(E.map):
    print(x, "->", l)
print(E.evidence)
print(format_tds(E.spec, ["target spec"]))

# ## Groups give back the left-regular representation

c5 = [[(a + b) % 5 for b in range(5)] for a in range(5)]
G = core.group_digroup(c5)
E = embed(G)
print("delta size:", E.spec.delta_size)
for x, l in enumerate(E.map):
    print(x, "->", l.f.cycle_string())

# ## Changing the bar-unit gives an isomorphic target

first = build(embed(D, D.halo[0]).spec).digroup
second = build(embed(D, D.halo[1]).spec).digroup
print("targets isomorphic:", core.find_isomorphism(first, second) is not None)
