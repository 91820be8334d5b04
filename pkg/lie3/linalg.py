"""Exact linear algebra over QQ: RREF, nullspace, rank and span membership.

Row reduction is delegated to sympy's DomainMatrix over QQ; values cross the
boundary as fractions.Fraction.
"""

import logging
from collections.abc import Sequence
from fractions import Fraction

from lie3.domain import from_domain, to_domain
from lie3.models import Subspace
from lie3.scalars import ONE, ZERO, Vector, is_zero

logger = logging.getLogger(__name__)


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[Vector], tuple[int, ...]]:
    """Reduced row-echelon form with zero rows removed, and the pivot columns."""
    rows = [r for r in rows if not is_zero(r)]
    if not rows:
        return [], ()
    reduced, pivots = to_domain(rows, ncols).rref()
    out = [r for r in from_domain(reduced) if not is_zero(r)]
    return out, tuple(pivots)


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    """Canonical (RREF) basis of {v : M v = 0}."""
    reduced, pivots = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    vectors: list[Vector] = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in zip(reduced, pivots):
            v[p] = -r[f]
        vectors.append(tuple(v))
    logger.debug("nullspace: %d equations, %d unknowns, dimension %d", len(rows), ncols, len(vectors))
    return rref(vectors, ncols)[0]


def span(vectors: Sequence[Sequence[Fraction]], dim: int) -> Subspace:
    return Subspace(dim, tuple(rref(vectors, dim)[0]))


def kernel(rows: Sequence[Sequence[Fraction]], dim: int) -> Subspace:
    return Subspace(dim, tuple(nullspace(rows, dim)))


def in_span(basis: Sequence[Sequence[Fraction]], v: Sequence[Fraction], dim: int) -> bool:
    """Whether v lies in the span of basis (rank test)."""
    if is_zero(v):
        return True
    return rank(list(basis) + [v], dim) == rank(basis, dim)


def contains(space: Subspace, v: Sequence[Fraction]) -> bool:
    return in_span(space.basis, v, space.dim)
