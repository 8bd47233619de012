"""Operad-spectrum compatibility, norm obstructions, lifting verdicts.

A spectrum is compatible with an operad when the operad's families meet
the spectrum's isotropy only in graph-trivial subgroups H x {e}.  Two
checking modes:

* orbit-reduction: for every class H in the isotropy, no nontrivial
  orbit H/K may be admissible.  For oracles closed under suborbits this
  decides compatibility at every level at once.
* direct-per-n: materialize the family at each level up to n_max and
  inspect the members directly; no closure assumption, but only levels
  up to n_max are covered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .gsets import h_classes
from .operads import _normalizer_type_maps
from .spectra import RationalSphere, isotropy

__all__ = [
    "CompatibilityReport",
    "NormWitness",
    "Verdict",
    "check_compatibility",
    "lifting_verdict",
    "norm_witness",
    "relevant_subgroups",
]

ORBIT_REDUCTION = "orbit-reduction"
DIRECT_PER_N = "direct-per-n"

# one table of the anchor strings attached to verdicts
CITATIONS = {
    "GuaranteedRational": (
        "rational sphere: equivariant multiplication on the rational sphere "
        "lifts the localization for any operad kind"
    ),
    "GuaranteedCompatible": (
        "compatible pair: families meet the isotropy only in graph-trivial "
        "subgroups, so the local model structure lifts to algebras"
    ),
    "Obstructed": (
        "norm collapse: a multiplicative norm from the trivial subgroup into "
        "the isotropy forces every local algebra to be trivial"
    ),
    "Unknown": (
        "undetermined: compatibility fails but the norm-collapse argument "
        "does not apply"
    ),
}


@dataclass(frozen=True)
class OrbitViolation:
    """A nontrivial admissible orbit H/K with H in the isotropy."""

    h_class: int
    orbit_type: int
    H: object
    K: object
    size: int

    def describe(self, lattice):
        names = lattice.class_labels()
        return (
            f"{names[lattice.class_index(self.H)]}/"
            f"{names[lattice.class_index(self.K)]} (size {self.size})"
        )


@dataclass(frozen=True)
class CompatibilityReport:
    compatible: bool
    violations: tuple
    method: str
    n_checked: Optional[int] = None

    def violation_keys(self):
        return frozenset((v.h_class, v.orbit_type) for v in self.violations)


def _check_same_group(O, E):
    if O.lattice.group != E.group:
        raise DomainError("operad and spectrum live over different groups")


def check_compatibility(O, E, mode=ORBIT_REDUCTION, n_max=None):
    """Compatibility of the spectrum expression E with the operad O.

    In orbit-reduction mode an optional n_max restricts attention to
    orbits of size at most n_max; with n_max=None the answer covers every
    level.  Direct mode always materializes families up to n_max
    (default 6).
    """
    _check_same_group(O, E)
    iso = isotropy(E, O.lattice)
    if mode == ORBIT_REDUCTION:
        return _check_by_orbits(O, iso, n_max)
    if mode == DIRECT_PER_N:
        return _check_direct(O, iso, 6 if n_max is None else n_max)
    raise DomainError(f"unknown compatibility mode {mode!r}")


def _canonical_type(lat, H, t):
    """Smallest orbit-type id in the normalizer orbit of t (the same
    normal form the family materialization uses)."""
    return min(p[t] for p in _normalizer_type_maps(lat, H))


def _check_by_orbits(O, iso, n_max):
    lat = O.lattice
    found = {}
    for c in sorted(iso.class_ids):
        H = lat.class_reps[c]
        hd = h_classes(lat, H)
        for t, K in enumerate(hd.reps):
            size = hd.orbit_sizes[t]
            if size == 1:
                continue  # the trivial orbit H/H is always allowed
            if n_max is not None and size > n_max:
                continue
            if O.admissible_orbit(H, K):
                tc = _canonical_type(lat, H, t)
                key = (c, tc)
                if key not in found:
                    found[key] = OrbitViolation(
                        c, tc, H, hd.reps[tc], hd.orbit_sizes[tc]
                    )
    violations = tuple(sorted(found.values(), key=lambda v: (v.h_class, v.orbit_type)))
    return CompatibilityReport(
        not violations, violations, ORBIT_REDUCTION, n_checked=n_max
    )


def _check_direct(O, iso, n_max):
    lat = O.lattice
    found = {}
    for n in range(1, n_max + 1):
        for member in O.family(n):
            if member.h_class not in iso.class_ids:
                continue
            T = member.structure
            if T.is_trivial:
                continue
            hd = T.hdata
            for t in sorted(set(T.orbit_types)):
                if hd.orbit_sizes[t] == 1:
                    continue
                tc = _canonical_type(lat, member.H, t)
                key = (member.h_class, tc)
                if key not in found:
                    found[key] = OrbitViolation(
                        member.h_class, tc, member.H, hd.reps[tc], hd.orbit_sizes[tc]
                    )
    violations = tuple(sorted(found.values(), key=lambda v: (v.h_class, v.orbit_type)))
    return CompatibilityReport(not violations, violations, DIRECT_PER_N, n_checked=n_max)


def relevant_subgroups(O, E, n):
    """Family members at level n whose projection lies in the isotropy."""
    _check_same_group(O, E)
    iso = isotropy(E, O.lattice)
    return tuple(m for m in O.family(n) if m.h_class in iso.class_ids)


@dataclass(frozen=True)
class NormWitness:
    """A subgroup K in the isotropy whose free orbit the operad admits."""

    K: object
    level: int

    def describe(self, lattice):
        name = lattice.class_labels()[lattice.class_index(self.K)]
        return f"free orbit {name}/1 at level {self.level}"


def norm_witness(O, E):
    """A norm obstruction: E nonequivariantly trivial, yet some isotropy
    class K has its free orbit admissible.  Returns None when the
    obstruction argument does not apply."""
    _check_same_group(O, E)
    lat = O.lattice
    iso = isotropy(E, lat)
    if lat.trivial_class() in iso.class_ids:
        return None
    triv = lat.subgroups[0]
    assert triv.order == 1
    for c in sorted(iso.class_ids):
        K = lat.class_reps[c]
        if O.admissible_orbit(K, triv):
            return NormWitness(K, K.order)
    return None


@dataclass(frozen=True)
class Verdict:
    tag: str
    citation: str
    witness: Optional[NormWitness] = None


def lifting_verdict(O, E):
    """Existence verdict for the E-local lifted structure on O-algebras.

    Priority: the rational sphere always lifts; a compatible pair lifts;
    a norm witness obstructs; otherwise the answer is open.
    """
    _check_same_group(O, E)
    if isinstance(E, RationalSphere):
        return Verdict("GuaranteedRational", CITATIONS["GuaranteedRational"])
    report = check_compatibility(O, E, mode=ORBIT_REDUCTION, n_max=None)
    if report.compatible:
        return Verdict("GuaranteedCompatible", CITATIONS["GuaranteedCompatible"])
    witness = norm_witness(O, E)
    if witness is not None:
        return Verdict("Obstructed", CITATIONS["Obstructed"], witness=witness)
    return Verdict("Unknown", CITATIONS["Unknown"])
