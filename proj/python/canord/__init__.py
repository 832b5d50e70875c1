"""Reflexive module counts over canonical orders, computed from the
resolution and from the group side."""

from ._canord import (
    CapExceeded,
    count_from_group,
    count_from_resolution,
    cover_structure_check,
    fundamental_cycle,
    lattice_dot,
    mckay_quiver,
    resolution,
    verify,
)

__all__ = [
    "CapExceeded",
    "count_from_group",
    "count_from_resolution",
    "cover_structure_check",
    "fundamental_cycle",
    "lattice_dot",
    "mckay_quiver",
    "resolution",
    "verify",
]
