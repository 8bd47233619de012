"""Operad models: admissible-set oracles, families, transfer systems.

Four kinds of model: minimal (trivial H-sets only), maximal (everything),
geometric (embeddability into a permutation universe), and custom.  The
geometric model over the universe generated by C6/C2 is the classic
example where C2 admits only trivial sets while C3 admits its free orbit.

Run:  python demos/04_operad_families.py
"""

from ninfty import catalog_group, lattice_of
from ninfty.gsets import hset_structures, orbit_gset
from ninfty.operads import (
    OperadModel,
    PermutationUniverse,
    enumerate_transfer_systems,
    validate_indexing_system,
)

G = catalog_group("C6")
lat = lattice_of(G)
labels = lat.class_labels()


def by_label(lbl):
    return lat.class_reps[labels.index(lbl)]


universe = PermutationUniverse(lat, [orbit_gset(G, by_label("C2"))])
O = OperadModel.geometric(lat, universe, name="geometric(C6/C2)")

print("admissible H-sets of size <= 3 for the C6/C2 universe:")
for lbl in labels:
    H = by_label(lbl)
    for n in (1, 2, 3):
        for T in hset_structures(lat, H, n):
            if O.admissible(H, T):
                print(f"  {T.describe()}")

print("\nfamily at level 2, one line per conjugacy class of graph subgroups:")
for kind, model in (
    ("e1", OperadModel.minimal(lat)),
    ("geometric", O),
    ("eG", OperadModel.maximal(lat)),
):
    members = ", ".join(m.describe() for m in model.family(2))
    print(f"  {kind:10s} {members}")

# closure-axiom validation: clean for the built-in kinds
report = validate_indexing_system(O, n_max=4)
print(f"\nindexing-system validation: ok={report.ok} "
      f"({report.n_checked} structures checked)")

# a deliberately broken oracle gets its violations reported as data
def broken(H, T):
    return T.is_trivial or (H.order == 6 and T.size == 6)

bad = OperadModel.custom(lat, broken, name="broken")
bad_report = validate_indexing_system(bad, n_max=6)
print(f"broken oracle: ok={bad_report.ok}, "
      f"first violation: {bad_report.violations[0].axiom} at "
      f"{bad_report.violations[0].subject}")

# transfer systems: the lattice-refinement avatar of these operads
for name in ("C2", "C4", "C6", "S3"):
    lat2 = lattice_of(catalog_group(name))
    systems = enumerate_transfer_systems(lat2)
    print(f"\n{name} has {len(systems)} transfer systems")
    for ts in systems:
        print(f"  {ts.sorted_pairs()}")
