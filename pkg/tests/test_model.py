"""Algebraic-model descriptor, fixed-point modules, rank bookkeeping."""

from __future__ import annotations

import pytest

from ninfty.burnside import table_of_marks
from ninfty.catalog import catalog_group
from ninfty.errors import DomainError
from ninfty.groups import lattice_of
from ninfty.model import algebraic_model, fixed_point_module, pi0_rank
from ninfty.spectra import (
    idem_sphere,
    orbit_spectrum,
    parse_spectrum,
    point,
    wedge,
)

from conftest import catalog_groups


def rep(lat, label):
    return lat.class_reps[lat.class_labels().index(label)]


# ---------------------------------------------------------------------------
# the descriptor

def test_trivial_group_descriptor():
    G = catalog_group("C1")
    desc = algebraic_model(G)
    assert desc.n_factors == 1
    assert desc.factors[0].weyl.order == 1


def test_c6_descriptor():
    G = catalog_group("C6")
    lat = lattice_of(G)
    desc = algebraic_model(G, lat)
    weyl_orders = [f.weyl.order for f in desc.factors]
    assert weyl_orders == [6, 3, 2, 1]  # H = 1, C2, C3, C6
    assert [f.label for f in desc.factors] == [
        "Ch(Q[C6])",
        "Ch(Q[C3])",
        "Ch(Q[C2])",
        "Ch(Q[1])",
    ]


def test_s3_descriptor():
    G = catalog_group("S3")
    desc = algebraic_model(G, lattice_of(G))
    assert [f.weyl.order for f in desc.factors] == [6, 1, 2, 1]


def test_descriptor_invariants(small_lattices):
    for G, lat in small_lattices:
        desc = algebraic_model(G, lat)
        assert desc.n_factors == lat.n_classes
        for f in desc.factors:
            H = f.rep
            assert f.weyl.order * H.order == lat.normalizer(H).order


# ---------------------------------------------------------------------------
# fixed-point modules

def test_trivial_orbit_modules():
    G = catalog_group("S3")
    lat = lattice_of(G)
    X = orbit_spectrum(rep(lat, "S3"))
    for c in range(lat.n_classes):
        m = fixed_point_module(X, c, lat)
        assert m.dimension == 1
        assert m.orbit_count == 1


def test_s3_mod_c2_modules():
    G = catalog_group("S3")
    lat = lattice_of(G)
    X = orbit_spectrum(rep(lat, "C2"))
    dims = [fixed_point_module(X, c, lat).dimension for c in range(lat.n_classes)]
    orbs = [fixed_point_module(X, c, lat).orbit_count for c in range(lat.n_classes)]
    assert dims == [3, 1, 0, 0]
    assert orbs == [1, 1, 0, 0]


def test_dimensions_reproduce_marks(small_lattices):
    for G, lat in small_lattices:
        tom = table_of_marks(lat)
        for i, K in enumerate(lat.class_reps):
            X = orbit_spectrum(K)
            for j in range(lat.n_classes):
                m = fixed_point_module(X, j, lat)
                assert m.dimension == tom.matrix[i][j]


def test_non_orbit_leaves_rejected():
    G = catalog_group("S3")
    lat = lattice_of(G)
    with pytest.raises(DomainError):
        fixed_point_module(idem_sphere(rep(lat, "C2")), 0, lat)


# ---------------------------------------------------------------------------
# ranks

def test_rank_of_point():
    G = catalog_group("S3")
    assert pi0_rank(point(G)) == 0


def test_rank_of_full_orbit_counts_classes():
    for name in ("C6", "S3", "Q8", "A4"):
        G = catalog_group(name)
        lat = lattice_of(G)
        assert pi0_rank(orbit_spectrum(rep(lat, lat.class_labels()[-1])), lat) == lat.n_classes


def test_rank_identity_against_subgroup_enumeration():
    for G in catalog_groups(16):
        lat = lattice_of(G)
        for K in lat.subgroups:
            want = lattice_of(K.as_group()).n_classes
            assert pi0_rank(orbit_spectrum(K), lat) == want


def test_rank_additivity():
    G = catalog_group("S4")
    lat = lattice_of(G)
    xs = [orbit_spectrum(K) for K in lat.class_reps[:4]]
    for a in xs:
        for b in xs:
            assert pi0_rank(wedge(a, b), lat) == pi0_rank(a, lat) + pi0_rank(b, lat)


def test_rank_via_parsed_expression():
    G = catalog_group("S3")
    lat = lattice_of(G)
    assert pi0_rank(parse_spectrum("orbit:S3/C2", G, lat), lat) == 2
    assert pi0_rank(parse_spectrum("orbit:S3/C2 v pt", G, lat), lat) == 2
