"""Monomial ideals in few variables: decompositions, depth, and clean and
pretty clean prime filtrations checked against brute-force oracles."""

from .construction import (
    AssConfiguration,
    build_codim2_clean,
    build_pretty_clean,
    classify_ass_config,
    cm_condition,
    generic_clean_search,
)
from .decomposition import ass_primes, dim, irreducible_decomposition, primary_components
from .errors import (
    InternalVerificationFailure,
    NotCohenMacaulay,
    NotSequentiallyCM,
    SearchExhausted,
    UnverifiedFiltration,
)
from .filtration import (
    PrimeFiltration,
    classify_filtration,
    dimension_filtration,
    is_scm,
    verify_prime_filtration,
)
from .monomial import Ambient, MonomialIdeal, MonomialPrime, parse_ideal
from .oracle import betti_table, depth, is_cm
from .stanley import stanley_report, to_stanley

__all__ = [
    "Ambient", "AssConfiguration", "InternalVerificationFailure", "MonomialIdeal", "MonomialPrime",
    "NotCohenMacaulay", "NotSequentiallyCM", "PrimeFiltration", "SearchExhausted", "UnverifiedFiltration",
    "ass_primes", "betti_table", "build_codim2_clean", "build_pretty_clean", "classify_ass_config",
    "classify_filtration", "cm_condition", "depth", "dim", "dimension_filtration", "generic_clean_search",
    "irreducible_decomposition", "is_cm", "is_scm", "parse_ideal", "primary_components", "stanley_report",
    "to_stanley", "verify_prime_filtration",
]
