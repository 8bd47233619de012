"""Operad models: admissibility oracles, families, validation, transfer systems.

The transfer-system enumerator is checked against the naive oracle that
tries all 2^(#pairs) sub-relations of the inclusion order whenever the
lattice has at most 6 subgroups.
"""

from __future__ import annotations

import itertools

import pytest

from ninfty.catalog import catalog_group, parse_group
from ninfty.errors import ResourceError
from ninfty.groups import full_subgroup, lattice_of, trivial_subgroup
from ninfty.gsets import graph_subgroup, h_classes, hset_structures, orbit_gset
from ninfty.operads import (
    OperadModel,
    PermutationUniverse,
    enumerate_transfer_systems,
    validate_indexing_system,
)

from conftest import catalog_groups


# ---------------------------------------------------------------------------
# helpers

def geometric(lat, *labels):
    names = lat.class_labels()
    gens = [
        orbit_gset(lat.group, lat.class_reps[names.index(lbl)]) for lbl in labels
    ]
    return OperadModel.geometric(lat, PermutationUniverse(lat, gens))


def rep(lat, label):
    return lat.class_reps[lat.class_labels().index(label)]


# ---------------------------------------------------------------------------
# oracle: exhaustive transfer-system search

def transfer_systems_oracle(lattice):
    G = lattice.group
    n = len(lattice.subgroups)
    pairs = [(i, j) for i in range(n) for j in lattice._leq[i] if i != j]
    conj = []
    for g in range(G.order):
        conj.append(
            tuple(
                lattice._byset[frozenset(G.conj(g, m) for m in s.members)]
                for s in lattice.subgroups
            )
        )
    meet = {
        (i, j): lattice._byset[
            lattice.subgroups[i].members & lattice.subgroups[j].members
        ]
        for i in range(n)
        for j in range(n)
    }

    def valid(rel):
        relset = set(rel) | {(i, i) for i in range(n)}
        for (i, j) in rel:
            for cmap in conj:
                if (cmap[i], cmap[j]) not in relset:
                    return False
            for m in range(n):
                if lattice.leq(m, j) and (meet[(i, m)], m) not in relset:
                    return False
            for (a, b) in rel:
                if b == i and (a, j) not in relset:
                    return False
        return True

    count = 0
    found = set()
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        rel = frozenset(p for p, b in zip(pairs, bits) if b)
        if valid(rel):
            count += 1
            found.add(rel)
    return found


# ---------------------------------------------------------------------------
# admissibility oracles

def test_minimal_oracle():
    lat = lattice_of(catalog_group("C6"))
    e1 = OperadModel.minimal(lat)
    for H in lat.class_reps:
        for n in (1, 2, 3):
            for T in hset_structures(lat, H, n):
                assert e1.admissible(H, T) == T.is_trivial


def test_maximal_oracle():
    lat = lattice_of(catalog_group("S3"))
    eG = OperadModel.maximal(lat)
    for H in lat.class_reps:
        for n in (1, 2, 3):
            for T in hset_structures(lat, H, n):
                assert eG.admissible(H, T)


def test_c6_little_disc_universe():
    # universe generated by the 3-point orbit C6/C2
    lat = lattice_of(catalog_group("C6"))
    O = geometric(lat, "C2")
    C2, C3, C6 = rep(lat, "C2"), rep(lat, "C3"), rep(lat, "C6")
    # the only C2-admissible sets are the trivial ones
    for n in range(1, 7):
        for T in hset_structures(lat, C2, n):
            assert O.admissible(C2, T) == T.is_trivial
    # the free C3-orbit is admissible
    free3 = hset_structures(lat, C3, 3)[0]
    assert free3.describe() == "[C3/1]"
    assert O.admissible(C3, free3)
    # C6: no free orbit (C2 acts trivially on everything in this universe),
    # but the orbit C6/C2 itself embeds
    hd = h_classes(lat, C6)
    for t, K in enumerate(hd.reps):
        from ninfty.gsets import HSetStructure

        T = HSetStructure(lat, C6, (t,))
        want = K.order % 2 == 0  # K must contain the kernel C2
        assert O.admissible(C6, T) == want


def test_trivial_sets_always_admissible():
    lat = lattice_of(catalog_group("S3"))
    models = [
        OperadModel.minimal(lat),
        OperadModel.maximal(lat),
        geometric(lat, "C2"),
        geometric(lat, "1"),
    ]
    from ninfty.gsets import trivial_structure

    for O in models:
        for H in lat.class_reps:
            for n in range(1, 5):
                assert O.admissible(H, trivial_structure(lat, H, n))


def test_universe_extremes_small():
    # free generator -> maximal; trivial generator -> minimal
    for name in ("C4", "S3", "Q8"):
        lat = lattice_of(catalog_group(name))
        full = geometric(lat, "1")          # orbit G/1 is free
        triv = geometric(lat, lat.class_labels()[-1])  # orbit G/G is a point
        eG = OperadModel.maximal(lat)
        e1 = OperadModel.minimal(lat)
        for H in lat.class_reps:
            for n in range(1, 5):
                for T in hset_structures(lat, H, n):
                    assert full.admissible(H, T) == eG.admissible(H, T)
                    assert triv.admissible(H, T) == e1.admissible(H, T)


# ---------------------------------------------------------------------------
# families

def test_minimal_family_is_graph_trivial():
    lat = lattice_of(catalog_group("S3"))
    e1 = OperadModel.minimal(lat)
    for n in (1, 2, 3, 4):
        members = e1.family(n)
        assert len(members) == lat.n_classes
        for m in members:
            assert m.structure.is_trivial
            assert m.graph.is_sigma_trivial()


def test_family_sandwich():
    for name in ("C6", "S3"):
        lat = lattice_of(catalog_group(name))
        e1 = OperadModel.minimal(lat)
        eG = OperadModel.maximal(lat)
        mid = geometric(lat, "C2")
        for n in range(1, 7):
            keys = lambda O: {
                (m.h_class, m.structure.orbit_types) for m in O.family(n)
            }
            assert keys(e1) <= keys(mid) <= keys(eG)


def test_family_members_have_admissible_structures():
    lat = lattice_of(catalog_group("C6"))
    O = geometric(lat, "C2")
    fam2 = O.family(2)
    # no free C2-orbit member at level 2
    for m in fam2:
        assert not (
            lat.class_labels()[m.h_class] == "C2" and not m.structure.is_trivial
        )
    # but eG has the free C2 graph at level 2
    eG = OperadModel.maximal(lat)
    labels = [lat.class_labels()[m.h_class] for m in eG.family(2)]
    nontrivial = [
        m for m in eG.family(2)
        if lat.class_labels()[m.h_class] == "C2" and not m.structure.is_trivial
    ]
    assert len(nontrivial) == 1


def test_family_cap():
    lat = lattice_of(catalog_group("C2"))
    O = OperadModel.maximal(lat)
    with pytest.raises(ResourceError):
        O.family(O.n_max + 1)


def test_family_deduplicates_conjugates():
    # in S3 the three C2 subgroups give one family class per orbit type
    lat = lattice_of(catalog_group("S3"))
    eG = OperadModel.maximal(lat)
    fam2 = eG.family(2)
    c2_members = [m for m in fam2 if lat.class_labels()[m.h_class] == "C2"]
    assert len(c2_members) == 2  # trivial pair and free orbit


def test_sigma_freeness_of_family_graphs():
    from ninfty.groups import pidentity

    lat = lattice_of(catalog_group("S3"))
    for O in (OperadModel.maximal(lat), geometric(lat, "C2")):
        for n in range(1, 5):
            for m in O.family(n):
                ident = pidentity(n)
                for h, perm in m.graph.pairs:
                    if perm == ident:
                        continue
                    assert h != lat.group.identity


# ---------------------------------------------------------------------------
# validation

def test_validation_clean_models():
    for name in ("S3", "C6"):
        lat = lattice_of(catalog_group(name))
        for O in (
            OperadModel.minimal(lat),
            OperadModel.maximal(lat),
            geometric(lat, "C2"),
        ):
            report = validate_indexing_system(O, n_max=4)
            assert report.ok, report.violations


def test_validation_flags_broken_oracle():
    lat = lattice_of(catalog_group("C4"))

    def broken(H, T):
        # admits exactly the free orbit of C4 and trivial sets: violates
        # restriction closure (free C4-orbit restricts to free C2-orbits)
        if T.is_trivial:
            return True
        return H.order == 4 and not T.is_trivial and T.size == 4

    O = OperadModel.custom(lat, broken, name="broken")
    report = validate_indexing_system(O, n_max=4)
    assert not report.ok
    axioms = {v.axiom for v in report.violations}
    assert "restriction" in axioms


def test_validation_counts_checked():
    lat = lattice_of(catalog_group("C2"))
    report = validate_indexing_system(OperadModel.maximal(lat), n_max=3)
    assert report.n_checked > 0
    assert report.ok


# ---------------------------------------------------------------------------
# transfer systems

def test_transfer_counts_small_chains():
    assert len(enumerate_transfer_systems(lattice_of(catalog_group("C1")))) == 1
    for p in (2, 3, 5):
        assert len(enumerate_transfer_systems(lattice_of(catalog_group(f"C{p}")))) == 2
    for p2 in ("C4", "C9"):
        assert len(enumerate_transfer_systems(lattice_of(catalog_group(p2)))) == 5


def test_transfer_matches_exhaustive_oracle():
    # every catalog lattice with at most 6 subgroups
    names = ["C1", "C2", "C3", "C4", "C5", "C6", "C9", "C25", "S3", "Q8"]
    extra = [parse_group("(0 1)(2 3), (0 2)(1 3)")]  # Klein four-group
    groups = [catalog_group(n) for n in names] + extra
    for G in groups:
        lat = lattice_of(G)
        if len(lat.subgroups) > 6:
            continue
        got = {ts.pairs for ts in enumerate_transfer_systems(lat)}
        assert got == transfer_systems_oracle(lat)


def test_transfer_enumeration_deterministic():
    lat = lattice_of(catalog_group("C6"))
    a = [ts.sorted_pairs() for ts in enumerate_transfer_systems(lat)]
    b = [ts.sorted_pairs() for ts in enumerate_transfer_systems(lat)]
    assert a == b


def test_transfer_cap():
    lat = lattice_of(catalog_group("S4"))
    with pytest.raises(ResourceError):
        enumerate_transfer_systems(lat, max_subgroups=5)


def test_klein_four_transfer_count():
    # V4 has 5 subgroups in a diamond; the count comes from the oracle
    lat = lattice_of(parse_group("(0 1)(2 3), (0 2)(1 3)"))
    assert len(lat.subgroups) == 5
    got = enumerate_transfer_systems(lat)
    assert len(got) == len(transfer_systems_oracle(lat))
