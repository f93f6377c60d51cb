"""Lifting homeomorphisms of the sphere to cyclic branched covers."""

from .abelian_group import Automorphism, GroupSpec, automorphisms
from .cover import CoverSpec, canonical_form, equivalent, new_cover, surface_invariants
from .homology import MappingClass, lifts_homology_oracle
from .lifting import (
    all_lift_bruteforce,
    all_lift_theorem,
    find_witness,
    liftable_subgroup,
    lifts,
    smod_iso,
)
from .superelliptic import all_lift_corollary, parse_curve, to_cover

__all__ = [
    "Automorphism",
    "CoverSpec",
    "GroupSpec",
    "MappingClass",
    "all_lift_bruteforce",
    "all_lift_corollary",
    "all_lift_theorem",
    "automorphisms",
    "canonical_form",
    "equivalent",
    "find_witness",
    "liftable_subgroup",
    "lifts",
    "lifts_homology_oracle",
    "new_cover",
    "parse_curve",
    "smod_iso",
    "surface_invariants",
    "to_cover",
]
