"""Tour of the group layer: catalog, subgroup lattices, Mobius, Weyl groups.

Run:  python demos/01_subgroup_lattices.py
"""

from ninfty import catalog_group, lattice_of, mobius, parse_group, weyl_group

# Groups come from a small catalog (Cn, Dn, Sn/An up to 5, Q8) or from
# explicit generators in cycle notation.
S4 = catalog_group("S4")
klein = parse_group("(0 1)(2 3), (0 2)(1 3)")
print(f"S4 has order {S4.order}; the explicit Klein group has order {klein.order}")

# The lattice holds every subgroup, its conjugacy classes, inclusion,
# normalizers and exact Mobius values.
lat = lattice_of(S4)
print(f"\nS4: {len(lat.subgroups)} subgroups in {lat.n_classes} classes")
for label, cls in zip(lat.class_labels(), lat.classes):
    rep = lat.subgroups[cls[0]]
    print(f"  {label:8s} order {rep.order:2d}   class size {len(cls)}")

# Mobius values on the bottom interval of the lattice: mu(1, H).
print("\nMobius values mu(1, H) for one representative per class:")
bottom = lat.subgroups[0]
for label, H in zip(lat.class_labels(), lat.class_reps):
    print(f"  mu(1, {label}) = {mobius(lat, bottom, H)}")

# Weyl groups W(H) = N(H)/H, realized as permutation groups on cosets.
print("\nWeyl groups:")
for label, H in zip(lat.class_labels(), lat.class_reps):
    W = weyl_group(lat, H)
    print(f"  W({label}) has order {W.order}")

# The same data powers the CLI:  ninfty marks S4 --dot lattice.dot
