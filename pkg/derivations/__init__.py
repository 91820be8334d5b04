"""Derivations and involutive derivations of 3-Lie algebras."""

from derivations.models import EigenSplit
from derivations.lab import (
    SEARCH_MAX_DIM,
    derivation_space,
    diagonal_sign_patterns,
    eigensplit,
    is_derivation_in_span,
    search_involutive_diagonal,
    verify_dd_identity,
    verify_derivation,
    verify_involutive,
)

__all__ = [
    "EigenSplit",
    "SEARCH_MAX_DIM",
    "derivation_space",
    "diagonal_sign_patterns",
    "eigensplit",
    "is_derivation_in_span",
    "search_involutive_diagonal",
    "verify_dd_identity",
    "verify_derivation",
    "verify_involutive",
]
