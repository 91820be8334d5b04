"""3-pre-Lie products induced by involutive derivations."""

from prelie.products import TriProduct, prelie_compatible, prelie_from_D
from prelie.checks import piecewise_check, subadjacent, verify_D_isomorphism, verify_prelie

__all__ = [
    "TriProduct",
    "prelie_compatible",
    "prelie_from_D",
    "piecewise_check",
    "subadjacent",
    "verify_D_isomorphism",
    "verify_prelie",
]
