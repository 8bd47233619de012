"""Table of marks and Burnside idempotents.

Three independent routes keep the module honest: marks are recomputed
from explicit coset G-sets point by point; idempotents are recomputed
from the subgroup-lattice Mobius function and the normalizer order; and
basis products are decomposed as honest G-sets.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from ninfty.burnside import (
    BurnsideElement,
    basis_element,
    burnside_product,
    idempotents,
    table_of_marks,
    unit_element,
)
from ninfty.catalog import catalog_group
from ninfty.errors import DomainError
from ninfty.groups import lattice_of
from ninfty.gsets import orbit_gset

from conftest import catalog_groups


# ---------------------------------------------------------------------------
# oracles

def marks_via_gsets(lattice):
    """Fixed points of explicit coset G-sets, element-by-element check."""
    G = lattice.group
    out = []
    for H in lattice.class_reps:
        X = orbit_gset(G, H)
        out.append(
            tuple(
                len(X.fixed_by(sorted(K.members))) for K in lattice.class_reps
            )
        )
    return tuple(out)


def idempotent_via_mobius(tom, c):
    """Idempotent from the lattice: (1/|N(H)|) sum |K| mu(K,H) [G/K]."""
    lat = tom.lattice
    H = lat.class_reps[c]
    N = lat.normalizer(H)
    h_idx = lat.subgroup_index(H)
    coeffs = [Fraction(0)] * tom.n_classes
    for k_idx in lat.subgroups_of(H):
        K = lat.subgroups[k_idx]
        coeffs[lat.class_of[k_idx]] += Fraction(
            K.order * lat._mobius[(k_idx, h_idx)], N.order
        )
    return BurnsideElement(tom, coeffs)


def product_via_gset_decomposition(lattice, i, j):
    """[G/H_i] * [G/H_j] decomposed as an honest G-set."""
    G = lattice.group
    X = orbit_gset(G, lattice.class_reps[i])
    Y = orbit_gset(G, lattice.class_reps[j])
    P = X.product(Y)
    coeffs = [0] * lattice.n_classes
    for orb in P.orbits():
        stab = P.stabilizer(orb[0])
        coeffs[lattice.class_index(stab)] += 1
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# table of marks

def test_trivial_group_marks():
    tom = table_of_marks(lattice_of(catalog_group("C1")))
    assert tom.matrix == ((1,),)


def test_c2_marks():
    tom = table_of_marks(lattice_of(catalog_group("C2")))
    assert tom.matrix == ((2, 0), (1, 1))


def test_s3_marks():
    tom = table_of_marks(lattice_of(catalog_group("S3")))
    assert tom.matrix == ((6, 0, 0, 0), (3, 1, 0, 0), (2, 0, 2, 0), (1, 1, 1, 1))


def test_marks_match_gset_oracle():
    for name in ("C2", "S3", "C6", "Q8", "A4", "D4"):
        lat = lattice_of(catalog_group(name))
        assert table_of_marks(lat).matrix == marks_via_gsets(lat)


def test_marks_shape(small_lattices):
    for G, lat in small_lattices:
        tom = table_of_marks(lat)
        r = tom.n_classes
        for i in range(r):
            # lower triangular with positive diagonal
            assert all(tom.matrix[i][j] == 0 for j in range(i + 1, r))
            assert tom.matrix[i][i] > 0
            # diagonal counts the Weyl group
            H = lat.class_reps[i]
            assert tom.matrix[i][i] == lat.normalizer(H).order // H.order
            # first column is the orbit size
            assert tom.matrix[i][0] == G.order // H.order
            # nonzero entries need subconjugacy
            for j in range(r):
                if tom.matrix[i][j] != 0:
                    assert j in lat.classes_below(H)


# ---------------------------------------------------------------------------
# idempotents

def test_trivial_group_idempotent_is_unit():
    tom = table_of_marks(lattice_of(catalog_group("C1")))
    (e,) = idempotents(tom)
    assert e == unit_element(tom)


def test_c2_idempotents_exact():
    tom = table_of_marks(lattice_of(catalog_group("C2")))
    e1, e2 = idempotents(tom)
    assert e1.coeffs == (Fraction(1, 2), Fraction(0))
    assert e2.coeffs == (Fraction(-1, 2), Fraction(1))


def test_idempotent_system(small_lattices):
    for _, lat in small_lattices:
        tom = table_of_marks(lat)
        es = idempotents(tom)
        total = es[0]
        for e in es[1:]:
            total = total + e
        assert total == unit_element(tom)
        for a, e in enumerate(es):
            assert burnside_product(e, e) == e
            assert e.marks() == tuple(
                Fraction(1 if j == a else 0) for j in range(tom.n_classes)
            )
            for b in range(a + 1, len(es)):
                assert burnside_product(e, es[b]).is_zero()


def test_idempotents_match_mobius_formula(small_lattices):
    for _, lat in small_lattices:
        tom = table_of_marks(lat)
        for c, e in enumerate(idempotents(tom)):
            assert e == idempotent_via_mobius(tom, c)


# ---------------------------------------------------------------------------
# ring structure

def test_unit_law():
    lat = lattice_of(catalog_group("S3"))
    tom = table_of_marks(lat)
    one = unit_element(tom)
    for c in range(tom.n_classes):
        x = basis_element(tom, c)
        assert burnside_product(one, x) == x
    # a denominator-heavy element round-trips too
    x = BurnsideElement(tom, (Fraction(2, 3), Fraction(-1, 7), Fraction(0), Fraction(5)))
    assert burnside_product(one, x) == x


def test_c2_free_orbit_squares():
    tom = table_of_marks(lattice_of(catalog_group("C2")))
    x = basis_element(tom, 0)
    assert burnside_product(x, x).coeffs == (Fraction(2), Fraction(0))
    assert x.marks() == (Fraction(2), Fraction(0))


def test_marks_are_ring_homomorphism():
    lat = lattice_of(catalog_group("S4"))
    tom = table_of_marks(lat)
    sample = [basis_element(tom, c) for c in range(tom.n_classes)]
    sample.append(BurnsideElement(tom, [Fraction(i - 3, 2) for i in range(tom.n_classes)]))
    for a in sample:
        for b in sample:
            prod = burnside_product(a, b)
            assert prod.marks() == tuple(
                x * y for x, y in zip(a.marks(), b.marks())
            )


def test_basis_products_are_genuine_gsets():
    for G in catalog_groups(12):
        lat = lattice_of(G)
        tom = table_of_marks(lat)
        for i in range(tom.n_classes):
            for j in range(tom.n_classes):
                prod = burnside_product(basis_element(tom, i), basis_element(tom, j))
                want = product_via_gset_decomposition(lat, i, j)
                assert prod.coeffs == tuple(Fraction(w) for w in want)
                assert all(c.denominator == 1 and c >= 0 for c in prod.coeffs)


def test_product_requires_same_ring():
    t1 = table_of_marks(lattice_of(catalog_group("C2")))
    t2 = table_of_marks(lattice_of(catalog_group("C3")))
    with pytest.raises(DomainError):
        burnside_product(basis_element(t1, 0), basis_element(t2, 0))
