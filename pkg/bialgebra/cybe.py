"""The r-matrix of an involutive derivation and the 3-Lie classical Yang-Baxter equation."""

import logging

from derivations.lab import verify_involutive
from lie3.exceptions import DomainError, ShapeError
from lie3.models import AlgebraSpec, CheckReport, LinearMap
from lie3.scalars import format_scalar
from lie3.tensor import Tensor, permute_factors

logger = logging.getLogger(__name__)

CYBE = "[[r,r,r]] = 0"


def r_from_D(alg: AlgebraSpec, D: LinearMap) -> Tensor:
    """r = Σ x_i*⊗Dx_i - Σ Dx_i⊗x_i* on the double space."""
    if not verify_involutive(alg, D).passed:
        raise DomainError("r is built from an involutive derivation")
    n = alg.dim
    terms = []
    for i in range(n):
        for m, d in enumerate(D.column(i)):
            if d:
                terms.append(((n + i, m), d))
                terms.append(((m, n + i), -d))
    return Tensor.from_terms(2, 2 * n, terms)


def is_skew(r: Tensor) -> bool:
    return permute_factors(r, 1, 2) == -r


def cybe_bracket(B: AlgebraSpec, r: Tensor) -> Tensor:
    """[[r,r,r]] from the monomials of r = Σ x_i⊗y_i.

    Sum over i, j, k of
    [x_i,x_j,x_k]⊗y_i⊗y_j⊗y_k + x_i⊗[y_i,x_j,x_k]⊗y_j⊗y_k
    + x_i⊗x_j⊗[y_i,y_j,x_k]⊗y_k + x_i⊗x_j⊗x_k⊗[y_i,y_j,y_k].
    """
    if r.rank != 2 or r.dim != B.dim:
        raise ShapeError(f"r must be rank 2 over dim {B.dim}, got rank {r.rank} dim {r.dim}")
    table = B.signed_table
    monomials = r.items()
    terms = []
    for (a1, b1), c1 in monomials:
        for (a2, b2), c2 in monomials:
            c12 = c1 * c2
            for (a3, b3), c3 in monomials:
                coeff = c12 * c3
                for l, d in table.get((a1, a2, a3), ()):
                    terms.append(((l, b1, b2, b3), coeff * d))
                for l, d in table.get((b1, a2, a3), ()):
                    terms.append(((a1, l, b2, b3), coeff * d))
                for l, d in table.get((b1, b2, a3), ()):
                    terms.append(((a1, a2, l, b3), coeff * d))
                for l, d in table.get((b1, b2, b3), ()):
                    terms.append(((a1, a2, a3, l), coeff * d))
    result = Tensor.from_terms(4, B.dim, terms)
    logger.debug("[[r,r,r]]: %d monomials, %d nonzero coordinates", len(monomials), len(result))
    return result


def verify_cybe(B: AlgebraSpec, r: Tensor, limit: int = 10) -> CheckReport:
    """Passes iff [[r,r,r]] is the zero tensor; lists up to `limit` nonzero coordinates."""
    value = cybe_bracket(B, r)
    report = CheckReport("cybe", checked=len(r) ** 3)
    for index, coeff in value.items()[:limit]:
        report.add_violation(CYBE, tuple(B.labels[i] for i in index), format_scalar(coeff), "0")
    if len(value) > limit:
        report.notes.append(f"{len(value)} nonzero coordinates in total")
    return report
