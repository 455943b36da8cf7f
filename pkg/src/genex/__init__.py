"""Finite permutation-group engine and verification workbench."""

from .perm import Permutation, element_order_r_part, format_cycles, parse_permutation
from .group import (
    BoundExceeded,
    Group,
    Homomorphism,
    WreathElement,
    coset_action,
    direct_product,
    group_from_generators,
    quotient,
    trivial_group,
    wreath_product,
)

__all__ = [
    "Permutation",
    "parse_permutation",
    "format_cycles",
    "element_order_r_part",
    "Group",
    "group_from_generators",
    "trivial_group",
    "BoundExceeded",
    "Homomorphism",
    "WreathElement",
    "coset_action",
    "quotient",
    "direct_product",
    "wreath_product",
]
