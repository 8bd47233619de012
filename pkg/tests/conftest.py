"""Shared fixtures: the group catalog used by the sweeps."""

from __future__ import annotations

import pytest

from ninfty.catalog import catalog_group
from ninfty.groups import lattice_of

# every named group the catalog can produce at desk scale
CATALOG_NAMES = (
    [f"C{n}" for n in range(1, 25)]
    + [f"D{n}" for n in range(3, 13)]
    + ["S1", "S2", "S3", "S4", "S5", "A1", "A2", "A3", "A4", "A5", "Q8"]
)


def catalog_groups(max_order=None):
    out = []
    for name in CATALOG_NAMES:
        G = catalog_group(name)
        if max_order is None or G.order <= max_order:
            out.append(G)
    return out


def lattices(max_order=None):
    return [(G, lattice_of(G)) for G in catalog_groups(max_order)]


@pytest.fixture(scope="session")
def small_lattices():
    """All catalog groups of order at most 24, with lattices."""
    return lattices(24)
