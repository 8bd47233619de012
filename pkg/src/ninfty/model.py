"""The by-Weyl-group factorization of rational G-spectra, descriptor level.

One factor per subgroup class (H): chain complexes of modules over the
rational group algebra of the Weyl group N(H)/H.  Geometric fixed points
of orbit wedges are computed space-level ((G/K)^H with its residual Weyl
action) and give the degree-0 data of each factor, plus a rank count that
cross-checks the splitting against plain subgroup enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import structure_name
from .errors import DomainError
from .groups import full_subgroup, lattice_of
from .gsets import fixed_points, orbit_gset
from .spectra import OrbitSpectrum, Point, leaves

__all__ = [
    "AlgebraicModelDescriptor",
    "Factor",
    "FixedPointModule",
    "algebraic_model",
    "fixed_point_module",
    "pi0_rank",
]


@dataclass(frozen=True)
class Factor:
    class_index: int
    rep: object          # representative subgroup of the class
    weyl: object         # the Weyl group as a FiniteGroup
    label: str


@dataclass(frozen=True)
class AlgebraicModelDescriptor:
    lattice: object
    factors: tuple

    @property
    def n_factors(self):
        return len(self.factors)


def algebraic_model(G, lattice=None):
    """One factor Ch(Q[W]) per subgroup class, in class order."""
    if lattice is None:
        lattice = lattice_of(G)
    factors = []
    for c, H in enumerate(lattice.class_reps):
        W = lattice.weyl(H).group
        wname = structure_name(full_subgroup(W))
        factors.append(Factor(c, H, W, f"Ch(Q[{wname}])"))
    return AlgebraicModelDescriptor(lattice, tuple(factors))


@dataclass(frozen=True)
class FixedPointModule:
    """Degree-0 fixed-point data of an orbit wedge at one class."""

    class_index: int
    wset: object        # GSet over the Weyl group
    dimension: int
    orbit_count: int


def _orbit_leaves(X):
    out = []
    for leaf in leaves(X):
        if isinstance(leaf, OrbitSpectrum):
            out.append(leaf)
        elif isinstance(leaf, Point):
            continue
        else:
            raise DomainError(
                "geometric fixed-point modules are defined for wedges of "
                "orbit spectra only"
            )
    return out


def _cached_orbit_gset(lattice, K):
    key = ("orbit-gset", K.members)
    got = lattice.memo.get(key)
    if got is None:
        got = orbit_gset(lattice.group, K)
        lattice.memo[key] = got
    return got


def fixed_point_module(X, cls, lattice=None):
    """The W-set (G/K)^H (disjoint union over the wedge) at class `cls`."""
    if lattice is None:
        lattice = lattice_of(X.group)
    if not isinstance(cls, int):
        cls = lattice.class_index(cls)
    H = lattice.class_reps[cls]
    wset = None
    for leaf in _orbit_leaves(X):
        piece = fixed_points(_cached_orbit_gset(lattice, leaf.subgroup), H, lattice)
        wset = piece if wset is None else wset.disjoint_union(piece)
    if wset is None:
        W = lattice.weyl(H).group
        wset = _empty_gset(W)
    return FixedPointModule(cls, wset, wset.size, len(wset.orbits()))


def _empty_gset(W):
    from .gsets import GSet

    return GSet(W, [() for _ in range(W.order)], labels=(), _trusted=True)


def pi0_rank(X, lattice=None):
    """Total number of Weyl orbits of fixed points across all classes."""
    if lattice is None:
        lattice = lattice_of(X.group)
    return sum(
        fixed_point_module(X, c, lattice).orbit_count
        for c in range(lattice.n_classes)
    )
