"""Automorphism orbits of finite permutation groups."""

from ._autorbit import (
    CapacityError,
    DegreeMismatch,
    Error,
    ParseError,
    Permutation,
    PermGroup,
    UnknownGroupError,
    analyze,
    automorphism_group_order,
    direct_product,
    group,
    is_solvable,
    isomorphic,
    load_group_file,
    omega,
    parse_group_file,
    spectrum,
    verify,
    verify_targets,
)

__all__ = [
    "CapacityError",
    "DegreeMismatch",
    "Error",
    "ParseError",
    "Permutation",
    "PermGroup",
    "UnknownGroupError",
    "analyze",
    "automorphism_group_order",
    "direct_product",
    "group",
    "is_solvable",
    "isomorphic",
    "load_group_file",
    "omega",
    "parse_group_file",
    "spectrum",
    "verify",
    "verify_targets",
]
