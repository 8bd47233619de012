"""Isotropy, compatibility, norm obstructions, lifting verdicts.

The compatibility question: does the operad's family sequence meet the
spectrum's geometric isotropy only in graph-trivial subgroups?  When it
does, the local model structure lifts to operad algebras; when the
spectrum is nonequivariantly trivial and a free orbit of an isotropy
class is admissible, a multiplicative norm collapses everything and the
lift is obstructed.

Run:  python demos/05_compatibility_verdicts.py
"""

from ninfty import catalog_group, lattice_of
from ninfty.compatibility import (
    check_compatibility,
    lifting_verdict,
    norm_witness,
    relevant_subgroups,
)
from ninfty.gsets import orbit_gset
from ninfty.operads import OperadModel, PermutationUniverse
from ninfty.spectra import isotropy, parse_spectrum

G = catalog_group("C6")
lat = lattice_of(G)
labels = lat.class_labels()

universe = PermutationUniverse(
    lat, [orbit_gset(G, lat.class_reps[labels.index("C2")])]
)
geo = OperadModel.geometric(lat, universe, name="geometric(C6/C2)")
e1 = OperadModel.minimal(lat)
eG = OperadModel.maximal(lat)

E = parse_spectrum("orbit:C6/C2", G, lat)
print(f"isotropy of orbit:C6/C2 = {isotropy(E, lat).labels()}")

for O in (e1, geo, eG):
    r = check_compatibility(O, E)
    shown = [v.describe(lat) for v in r.violations]
    print(f"  {O.name:18s} compatible={r.compatible}  violations={shown}")

# both checking modes agree (orbit reduction vs direct family materialization)
ra = check_compatibility(eG, E, mode="orbit-reduction", n_max=6)
rb = check_compatibility(eG, E, mode="direct-per-n", n_max=6)
print(f"mode agreement: {ra.violation_keys() == rb.violation_keys()}")

# the relevant part of the family at level 2
rel = relevant_subgroups(eG, E, 2)
print("relevant level-2 subgroups for eG:", [m.describe() for m in rel])

# norm obstruction: an idempotent sphere away from the trivial class
E2 = parse_spectrum("idem:(C2)", G, lat)
w = norm_witness(eG, E2)
print(f"\nnorm witness for (eG, idem:(C2)): {w.describe(lat)}")

print("\nverdicts:")
for O in (e1, geo, eG):
    for text in ("SQ", "orbit:C6/C2", "idem:(C2)"):
        X = parse_spectrum(text, G, lat)
        v = lifting_verdict(O, X)
        print(f"  {O.name:18s} {text:14s} -> {v.tag}")
