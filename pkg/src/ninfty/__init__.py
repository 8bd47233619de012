"""Exact combinatorics of equivariant operads over finite groups.

The package computes, for a finite permutation group G:

* the subgroup lattice with conjugacy classes, Mobius values, normalizers
  and Weyl groups;
* the table of marks and the complete orthogonal idempotent system of the
  rational Burnside ring (exact rational arithmetic throughout);
* finite G-sets, H-set structures on n letters and their graph subgroups
  of G x Sigma_n;
* N-infinity operad models given by admissible-set oracles (minimal,
  maximal, geometric over a permutation universe, custom), their family
  sequences, indexing-system validation and transfer-system enumeration;
* geometric-isotropy sets of spectrum expressions, operad compatibility,
  norm obstructions and lifted-model-structure verdicts;
* the by-Weyl-group factorization underlying the algebraic model, with
  geometric-fixed-point modules and rank bookkeeping.
"""

from .errors import DomainError, NinftyError, ParseError, ResourceError
from .groups import (
    FiniteGroup,
    Subgroup,
    SubgroupLattice,
    enumerate_subgroups,
    fraction_str,
    full_subgroup,
    lattice_of,
    mobius,
    trivial_subgroup,
    weyl_group,
)
from .catalog import catalog_group, parse_group, structure_name
from .gsets import (
    GraphSubgroup,
    GSet,
    HSetStructure,
    fixed_points,
    graph_subgroup,
    h_classes,
    hset_structures,
    orbit_gset,
)
from .operads import (
    OperadModel,
    PermutationUniverse,
    ValidationReport,
    enumerate_transfer_systems,
    family,
    validate_indexing_system,
)
from .spectra import (
    IsotropySet,
    SpectrumExpr,
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
from .compatibility import (
    CompatibilityReport,
    Verdict,
    check_compatibility,
    lifting_verdict,
    norm_witness,
    relevant_subgroups,
)
from .model import (
    AlgebraicModelDescriptor,
    FixedPointModule,
    algebraic_model,
    fixed_point_module,
    pi0_rank,
)

__all__ = [
    "AlgebraicModelDescriptor",
    "CompatibilityReport",
    "DomainError",
    "FiniteGroup",
    "FixedPointModule",
    "GSet",
    "GraphSubgroup",
    "HSetStructure",
    "IsotropySet",
    "NinftyError",
    "OperadModel",
    "ParseError",
    "PermutationUniverse",
    "ResourceError",
    "SpectrumExpr",
    "Subgroup",
    "SubgroupLattice",
    "ValidationReport",
    "Verdict",
    "algebraic_model",
    "catalog_group",
    "check_compatibility",
    "enumerate_subgroups",
    "enumerate_transfer_systems",
    "family",
    "fixed_point_module",
    "fixed_points",
    "fraction_str",
    "full_subgroup",
    "graph_subgroup",
    "h_classes",
    "hset_structures",
    "idem_sphere",
    "is_free",
    "isotropy",
    "lattice_of",
    "lifting_verdict",
    "mobius",
    "norm_witness",
    "orbit_gset",
    "orbit_spectrum",
    "parse_group",
    "parse_spectrum",
    "pi0_rank",
    "point",
    "rational_sphere",
    "relevant_subgroups",
    "smash",
    "structure_name",
    "trivial_subgroup",
    "validate_indexing_system",
    "wedge",
    "weyl_group",
]

__version__ = "0.1.0"
