"""Semidirect products, r-matrices and local cocycle 3-Lie bialgebras."""

from bialgebra.double import DoubleSpace, coadjoint, semidirect
from bialgebra.cybe import cybe_bracket, is_skew, r_from_D, verify_cybe
from bialgebra.coproduct import (
    Coproduct,
    act_in_slot,
    coproduct_from_r,
    coproduct_via_products,
    coproduct_via_split,
    dual_bracket,
    verify_alternating,
    verify_cocycle,
    verify_local_cocycle_bialgebra,
    verify_slot_representation,
    verify_structure_pattern,
)

__all__ = [
    "DoubleSpace",
    "coadjoint",
    "semidirect",
    "cybe_bracket",
    "is_skew",
    "r_from_D",
    "verify_cybe",
    "Coproduct",
    "act_in_slot",
    "coproduct_from_r",
    "coproduct_via_products",
    "coproduct_via_split",
    "dual_bracket",
    "verify_alternating",
    "verify_cocycle",
    "verify_local_cocycle_bialgebra",
    "verify_slot_representation",
    "verify_structure_pattern",
]
