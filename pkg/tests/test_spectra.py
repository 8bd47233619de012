"""Spectrum expressions, isotropy rules, and the concrete syntax."""

from __future__ import annotations

import pytest

from ninfty.catalog import catalog_group
from ninfty.errors import DomainError, ParseError
from ninfty.groups import lattice_of
from ninfty.spectra import (
    format_spectrum,
    idem_sphere,
    is_free,
    isotropy,
    orbit_spectrum,
    parse_spectrum,
    point,
    rational_sphere,
    smash,
    wedge,
)


def rep(lat, label):
    return lat.class_reps[lat.class_labels().index(label)]


def test_leaf_rules():
    G = catalog_group("S3")
    lat = lattice_of(G)
    assert isotropy(point(G), lat).class_ids == frozenset()
    assert isotropy(rational_sphere(G), lat).class_ids == frozenset(range(4))
    assert isotropy(idem_sphere(rep(lat, "C2")), lat).labels() == ["C2"]
    assert isotropy(orbit_spectrum(rep(lat, "C3")), lat).labels() == ["1", "C3"]


def test_c6_orbit_isotropy():
    G = catalog_group("C6")
    lat = lattice_of(G)
    iso = isotropy(orbit_spectrum(rep(lat, "C2")), lat)
    assert iso.labels() == ["1", "C2"]


def test_wedge_and_smash_rules():
    G = catalog_group("S3")
    lat = lattice_of(G)
    a = idem_sphere(rep(lat, "C2"))
    b = orbit_spectrum(rep(lat, "C3"))
    assert isotropy(wedge(a, b), lat).labels() == ["1", "C2", "C3"]
    assert isotropy(smash(a, b), lat).labels() == []


def test_unit_laws():
    G = catalog_group("S3")
    lat = lattice_of(G)
    for X in (
        orbit_spectrum(rep(lat, "C2")),
        idem_sphere(rep(lat, "C3")),
        rational_sphere(G),
        point(G),
    ):
        assert isotropy(wedge(X, point(G)), lat) == isotropy(X, lat)
        assert isotropy(smash(X, rational_sphere(G)), lat) == isotropy(X, lat)


def test_orbit_isotropy_downward_closed():
    for name in ("C6", "S3", "S4", "Q8"):
        G = catalog_group(name)
        lat = lattice_of(G)
        for K in lat.class_reps:
            iso = isotropy(orbit_spectrum(K), lat)
            for c in iso.class_ids:
                # every subgroup of a member class is again in the set
                rep_c = lat.class_reps[c]
                for idx in lat.subgroups_of(rep_c):
                    assert lat.class_of[idx] in iso.class_ids


def test_idem_sphere_is_singleton():
    for name in ("C6", "S4"):
        G = catalog_group(name)
        lat = lattice_of(G)
        for K in lat.class_reps:
            assert len(isotropy(idem_sphere(K), lat)) == 1


def test_is_free():
    G = catalog_group("S3")
    lat = lattice_of(G)
    assert is_free(orbit_spectrum(rep(lat, "1")), lat)
    assert not is_free(orbit_spectrum(rep(lat, "S3")), lat)
    assert is_free(idem_sphere(rep(lat, "1")), lat)
    assert is_free(point(G), lat)
    assert not is_free(rational_sphere(G), lat)


def test_mixed_groups_rejected_at_isotropy():
    # bypass the constructor to exercise the isotropy-level check
    from ninfty.spectra import Wedge

    a = rational_sphere(catalog_group("C2"))
    b = point(catalog_group("C3"))
    with pytest.raises(DomainError):
        isotropy(Wedge(a, b))


def test_wedge_constructor_rejects_mixed_groups():
    a = rational_sphere(catalog_group("C2"))
    b = point(catalog_group("C3"))
    with pytest.raises(DomainError):
        wedge(a, b)
    with pytest.raises(DomainError):
        smash(a, b)


# ---------------------------------------------------------------------------
# parsing

def test_parse_leaves():
    G = catalog_group("C6")
    lat = lattice_of(G)
    assert parse_spectrum("SQ", G, lat) == rational_sphere(G)
    assert parse_spectrum("pt", G, lat) == point(G)
    assert parse_spectrum("orbit:C6/C2", G, lat) == orbit_spectrum(rep(lat, "C2"))
    assert parse_spectrum("idem:(C3)", G, lat) == idem_sphere(rep(lat, "C3"))


def test_parse_precedence_and_parens():
    G = catalog_group("C6")
    lat = lattice_of(G)
    X = parse_spectrum("pt v SQ ^ orbit:C6/C2", G, lat)
    # smash binds tighter than wedge
    from ninfty.spectra import Smash, Wedge

    assert isinstance(X, Wedge)
    assert isinstance(X.right, Smash)
    Y = parse_spectrum("(pt v SQ) ^ orbit:C6/C2", G, lat)
    assert isinstance(Y, Smash)


def test_parse_format_round_trip():
    G = catalog_group("S3")
    lat = lattice_of(G)
    leaves = ["SQ", "pt", "orbit:S3/C2", "idem:(C3)", "orbit:S3/S3"]
    exprs = list(leaves)
    exprs += [f"{a} v {b}" for a in leaves for b in leaves]
    exprs += [f"{a} ^ {b}" for a in leaves[:3] for b in leaves[:3]]
    exprs += ["(pt v SQ) ^ idem:(C2)", "pt v SQ ^ idem:(C2) v orbit:S3/1"]
    for text in exprs:
        X = parse_spectrum(text, G, lat)
        assert parse_spectrum(format_spectrum(X, lat), G, lat) == X


def test_parse_errors():
    G = catalog_group("C6")
    lat = lattice_of(G)
    for bad in (
        "",
        "orbit:C6",
        "orbit:C5/C2",     # wrong group name
        "idem:(C5)",       # no such class
        "SQ v",
        "SQ )",
        "bogus",
        "SQ pt",
    ):
        with pytest.raises(ParseError):
            parse_spectrum(bad, G, lat)
