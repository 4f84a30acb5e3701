"""Exact characteristic polynomials of automorphisms of hyperelliptic curves."""

from .exactpoly import Poly
from .spectrum import CyclotomicProfile, poly_from_profile, profile_from_m, profile_from_poly
from .theorem import CharPolyResult, RamConfig, charpoly_cases, classify, match_case, quotient_genus
from .oracle import verify_range

__all__ = [
    "Poly",
    "CyclotomicProfile",
    "profile_from_poly",
    "profile_from_m",
    "poly_from_profile",
    "CharPolyResult",
    "RamConfig",
    "charpoly_cases",
    "classify",
    "match_case",
    "quotient_genus",
    "verify_range",
]
