"""Table of marks and the rational Burnside ring with its idempotents.

The mark homomorphism sends a virtual G-set to its fixed-point counts
along the subgroup classes; it is injective with lower-triangular matrix
on the basis [G/H], so elements can be recovered from mark vectors by an
exact triangular solve.  All arithmetic is over Fraction -- an idempotent
has to satisfy e*e = e on the nose, not up to rounding.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .groups import _cosets, fraction_str

__all__ = [
    "BurnsideElement",
    "TableOfMarks",
    "basis_element",
    "burnside_product",
    "idempotents",
    "table_of_marks",
    "unit_element",
]


class TableOfMarks:
    """Fixed-point counts m[i][j] = |(G/H_i)^{H_j}| over subgroup classes."""

    def __init__(self, lattice):
        G = lattice.group
        reps = lattice.class_reps
        r = len(reps)
        matrix = []
        for H in reps:
            coset_reps, coset_of = _cosets(G, range(G.order), H.members)
            row = []
            for K in reps:
                kgens = K.gens()
                fixed = sum(
                    1
                    for c, rep in enumerate(coset_reps)
                    if all(coset_of[G.mul(k, rep)] == c for k in kgens)
                )
                row.append(fixed)
            matrix.append(tuple(row))
        self.lattice = lattice
        self.group = G
        self.reps = reps
        self.matrix = tuple(matrix)
        self.n_classes = r

    def labels(self):
        return self.lattice.class_labels()

    def mark(self, i, j):
        return self.matrix[i][j]

    def solve(self, mark_vector):
        """The unique element with the given mark vector (exact)."""
        m = self.matrix
        r = self.n_classes
        v = [Fraction(x) for x in mark_vector]
        coeffs = [Fraction(0)] * r
        for j in range(r - 1, -1, -1):
            acc = v[j]
            for i in range(j + 1, r):
                acc -= coeffs[i] * m[i][j]
            coeffs[j] = acc / m[j][j]
        return BurnsideElement(self, tuple(coeffs))

    def __repr__(self):
        return f"TableOfMarks({self.group.label}, {self.n_classes} classes)"


def table_of_marks(lattice):
    key = "table-of-marks"
    got = lattice.memo.get(key)
    if got is None:
        got = TableOfMarks(lattice)
        lattice.memo[key] = got
    return got


class BurnsideElement:
    """An exact-rational vector in the basis {[G/H]} of the Burnside ring."""

    def __init__(self, parent, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != parent.n_classes:
            raise DomainError("coefficient vector length must match class count")
        self.parent = parent
        self.coeffs = coeffs

    def marks(self):
        m = self.parent.matrix
        r = self.parent.n_classes
        return tuple(
            sum((self.coeffs[i] * m[i][j] for i in range(r)), Fraction(0))
            for j in range(r)
        )

    def _coerce(self, other):
        if not isinstance(other, BurnsideElement):
            raise DomainError("expected a Burnside element")
        if other.parent is not self.parent and other.parent.lattice is not self.parent.lattice:
            raise DomainError("elements belong to different Burnside rings")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return BurnsideElement(
            self.parent, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        other = self._coerce(other)
        return BurnsideElement(
            self.parent, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rmul__(self, scalar):
        return BurnsideElement(
            self.parent, tuple(Fraction(scalar) * c for c in self.coeffs)
        )

    def __mul__(self, other):
        if isinstance(other, BurnsideElement):
            return burnside_product(self, other)
        return self.__rmul__(other)

    def __eq__(self, other):
        return (
            isinstance(other, BurnsideElement)
            and self.parent.lattice is other.parent.lattice
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def describe(self):
        labels = self.parent.labels()
        gname = self.parent.group.name or "G"
        parts = []
        for c, lbl in zip(self.coeffs, labels):
            if c:
                parts.append(f"{fraction_str(c)}*[{gname}/{lbl}]")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"BurnsideElement({self.describe()})"


def basis_element(tom, class_index):
    """[G/H] for the given subgroup class."""
    coeffs = [Fraction(0)] * tom.n_classes
    coeffs[class_index] = Fraction(1)
    return BurnsideElement(tom, tuple(coeffs))


def unit_element(tom):
    """The ring unit [G/G]."""
    return basis_element(tom, tom.n_classes - 1)


def idempotents(tom):
    """The complete orthogonal idempotent system, one per subgroup class.

    The idempotent of class (H) is the element whose mark vector is the
    indicator of (H); it comes out of the triangular mark system exactly.
    """
    out = []
    for c in range(tom.n_classes):
        vec = [Fraction(0)] * tom.n_classes
        vec[c] = Fraction(1)
        out.append(tom.solve(vec))
    return out


def burnside_product(a, b):
    """Product via marks: multiply mark vectors pointwise, solve back."""
    if a.parent.lattice is not b.parent.lattice:
        raise DomainError("elements belong to different Burnside rings")
    ma, mb = a.marks(), b.marks()
    return a.parent.solve(tuple(x * y for x, y in zip(ma, mb)))
