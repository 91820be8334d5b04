"""Exact tensors and 3-Lie algebras given by structure constants."""

from lie3.exceptions import (
    CapacityError,
    DomainError,
    Lie3Error,
    ParameterError,
    ParseError,
    ShapeError,
    UnknownCaseError,
)
from lie3.scalars import Scalar, Vector, basis_vector, format_scalar, format_vector, parse_scalar, to_scalar
from lie3.tensor import Tensor, alternating_part, format_tensor, format_wedge, permute_factors, tensor_add, wedge3, wedge_coefficients
from lie3.models import AlgebraSpec, CheckReport, LinearMap, Representation, Subspace, Violation
from lie3.linalg import in_span, kernel, nullspace, rank, rref, span
from lie3.algebra import (
    ad,
    bracket,
    center,
    derived_algebra,
    verify_antisymmetry,
    verify_filippov,
)
from lie3.representation import (
    adjoint_representation,
    semidirect_with,
    verify_o_operator,
    verify_representation,
    zero_representation,
)

__all__ = [
    "Lie3Error",
    "ShapeError",
    "DomainError",
    "CapacityError",
    "ParameterError",
    "ParseError",
    "UnknownCaseError",
    "Scalar",
    "Vector",
    "basis_vector",
    "format_scalar",
    "format_vector",
    "parse_scalar",
    "to_scalar",
    "Tensor",
    "alternating_part",
    "format_tensor",
    "format_wedge",
    "permute_factors",
    "tensor_add",
    "wedge3",
    "wedge_coefficients",
    "AlgebraSpec",
    "CheckReport",
    "LinearMap",
    "Representation",
    "Subspace",
    "Violation",
    "in_span",
    "kernel",
    "nullspace",
    "rank",
    "rref",
    "span",
    "ad",
    "bracket",
    "center",
    "derived_algebra",
    "verify_antisymmetry",
    "verify_filippov",
    "adjoint_representation",
    "semidirect_with",
    "verify_o_operator",
    "verify_representation",
    "zero_representation",
]
