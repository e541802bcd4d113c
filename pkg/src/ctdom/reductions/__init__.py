"""SAT formulas, hardness gadgets, certificates and the subdivision transforms."""

from .formula import (
    Flavor,
    Formula,
    all_satisfying,
    load_formula,
    parse_formula,
    random_3sat,
    random_nae,
    random_one_in_three,
    sat_bruteforce,
)
from .gadgets import (
    KINDS,
    GadgetBundle,
    GadgetKind,
    Predicted,
    SideClaim,
    build_gadget,
    certificate_from_assignment,
    certificate_labels,
    check_claimed_class,
    side_claims,
)
from .local import LocalClaim, check_local_claims, claims_for, local_minimum
from .subdivision import td_transform_down, td_transform_up

__all__ = [
    "Flavor",
    "Formula",
    "all_satisfying",
    "load_formula",
    "parse_formula",
    "random_3sat",
    "random_nae",
    "random_one_in_three",
    "sat_bruteforce",
    "KINDS",
    "GadgetBundle",
    "GadgetKind",
    "Predicted",
    "SideClaim",
    "build_gadget",
    "certificate_from_assignment",
    "certificate_labels",
    "check_claimed_class",
    "side_claims",
    "LocalClaim",
    "check_local_claims",
    "claims_for",
    "local_minimum",
    "td_transform_down",
    "td_transform_up",
]
