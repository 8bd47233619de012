"""Finite H-sets on n letters and their graph subgroups of G x Sigma_n.

An H-set of size n is a multiset of orbit types; it encodes a
homomorphism H -> Sigma_n up to conjugacy, whose graph is a subgroup of
G x Sigma_n meeting {e} x Sigma_n trivially.

Run:  python demos/03_hsets_and_graph_subgroups.py
"""

from ninfty import catalog_group, lattice_of
from ninfty.groups import format_perm
from ninfty.gsets import fixed_points, graph_subgroup, hset_structures, orbit_gset

G = catalog_group("C6")
lat = lattice_of(G)
labels = lat.class_labels()

# fixed points of coset spaces, with the residual Weyl action
C2 = lat.class_reps[labels.index("C2")]
X = orbit_gset(G, C2)
fp = fixed_points(X, C2, lat)
print(f"(C6/C2)^C2 has {fp.size} points; the residual group has order {fp.group.order}")

# all H-set structures of each size, for each subgroup class
for label, H in zip(labels, lat.class_reps):
    for n in (2, 3):
        shapes = [T.describe() for T in hset_structures(lat, H, n)]
        print(f"H = {label:3s} n = {n}:  {', '.join(shapes)}")

# realizing a structure as a graph subgroup
C3 = lat.class_reps[labels.index("C3")]
free = hset_structures(lat, C3, 3)[0]
gamma = graph_subgroup(free)
print(f"\ngraph of the free C3-orbit {free.describe()}: order {gamma.order}")
for h, perm in sorted(gamma.pairs):
    print(f"  element {h} of C6  ->  {format_perm(perm)} in Sigma_3")
print(f"projection to G recovers C3: {gamma.projection().members == C3.members}")
print(f"the Sigma_n part is trivial only at the identity: "
      f"{not gamma.is_sigma_trivial()}")
