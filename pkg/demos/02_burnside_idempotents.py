"""The rational Burnside ring: table of marks and orthogonal idempotents.

Everything is exact rational arithmetic; e*e == e holds on the nose.

Run:  python demos/02_burnside_idempotents.py
"""

from ninfty import catalog_group, lattice_of
from ninfty.burnside import (
    burnside_product,
    idempotents,
    table_of_marks,
    unit_element,
)

G = catalog_group("S3")
lat = lattice_of(G)
tom = table_of_marks(lat)

print("table of marks of S3 (rows: orbits G/H, columns: fixed points of K):")
labels = tom.labels()
print("        " + "  ".join(f"{l:>4s}" for l in labels))
for label, row in zip(labels, tom.matrix):
    print(f"  {label:>4s}  " + "  ".join(f"{x:4d}" for x in row))

print("\nidempotents (mark vector = indicator of one class):")
es = idempotents(tom)
for label, e in zip(labels, es):
    print(f"  e({label}) = {e.describe()}")

total = es[0]
for e in es[1:]:
    total = total + e
print(f"\nsum of idempotents equals 1: {total == unit_element(tom)}")
print(f"e(C2) squared equals itself: {burnside_product(es[1], es[1]) == es[1]}")
print(f"e(C2) * e(C3) vanishes:      {burnside_product(es[1], es[2]).is_zero()}")

# The splitting is used one conjugacy class at a time.  For a class (H)
# the same computation runs inside the normalizer N(H) and inside the
# Weyl group W(H) = N(H)/H; no extra machinery is needed.
H = lat.class_reps[1]  # a C2 inside S3
N = lat.normalizer(H)
W = lat.weyl(H).group
for name, K in (("N(C2)", N.as_group()), ("W(C2)", W)):
    lk = lattice_of(K)
    ek = idempotents(table_of_marks(lk))
    print(f"\n{name} has order {K.order}; its idempotents:")
    for lbl, e in zip(lk.class_labels(), ek):
        print(f"  e({lbl}) = {e.describe()}")
