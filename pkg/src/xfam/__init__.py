"""Exact computations and brute-force oracles for cross-intersecting families."""

from .bounds import BoundReport, HypothesisError, bound, gamma, phi, phi_second
from .exactmath import binom, cascade, cascade_shadow_bound
from .lemmas import check_lemma
from .oracle import SearchConstraints, SearchResult, search_exhaustive, search_lex, verify_theorem
from .setfamily import CapExceeded, Family, dual, shadow

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CapExceeded",
    "Family",
    "HypothesisError",
    "SearchConstraints",
    "SearchResult",
    "binom",
    "bound",
    "cascade",
    "cascade_shadow_bound",
    "check_lemma",
    "dual",
    "gamma",
    "phi",
    "phi_second",
    "search_exhaustive",
    "search_lex",
    "shadow",
    "verify_theorem",
]
