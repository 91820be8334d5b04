"""Trilinear product tables and the two 3-pre-Lie products of an involutive derivation."""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product

from derivations.lab import verify_involutive
from lie3.algebra import basis, bracket
from lie3.exceptions import DomainError, ShapeError
from lie3.models import AlgebraSpec, LinearMap, default_labels
from lie3.scalars import (
    ONE,
    ZERO,
    SparseVector,
    Vector,
    add_scaled,
    as_vector,
    check_dim,
    drop_zeros,
    is_zero,
    support,
    to_dense,
    to_sparse,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TriProduct:
    """A trilinear product {x_i, x_j, x_k} stored on ordered basis triples.

    No symmetry is assumed; absent triples are zero.
    """

    dim: int
    table: Mapping[tuple[int, int, int], Vector] = field(default_factory=dict)
    name: str = field(default="", compare=False)
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        clean: dict[tuple[int, int, int], Vector] = {}
        for key, value in self.table.items():
            if len(key) != 3 or not all(0 <= i < self.dim for i in key):
                raise ShapeError(f"product triple {key} out of range for dim {self.dim}")
            vec = as_vector(value)
            check_dim(vec, self.dim, f"product {key}")
            if not is_zero(vec):
                clean[tuple(key)] = vec
        object.__setattr__(self, "table", dict(sorted(clean.items())))
        object.__setattr__(self, "labels", tuple(self.labels) or default_labels(self.dim))

    def product(self, i: int, j: int, k: int) -> Vector:
        return self.table.get((i, j, k), (ZERO,) * self.dim)

    @cached_property
    def sparse_table(self) -> dict[tuple[int, int, int], tuple[tuple[int, Fraction], ...]]:
        """Nonzero (index, coefficient) pairs of each stored entry."""
        return {key: tuple(support(vec)) for key, vec in self.table.items()}

    def evaluate_sparse(self, u: SparseVector, v: SparseVector, w: SparseVector) -> SparseVector:
        table = self.sparse_table
        acc: SparseVector = {}
        for i, a in u.items():
            for j, b in v.items():
                ab = a * b
                for k, c in w.items():
                    entry = table.get((i, j, k))
                    if entry:
                        add_scaled(acc, ab * c, entry)
        return drop_zeros(acc)

    def cyclic_sparse(self, u: SparseVector, v: SparseVector, w: SparseVector) -> SparseVector:
        acc: SparseVector = {}
        for part in (self.evaluate_sparse(u, v, w), self.evaluate_sparse(v, w, u), self.evaluate_sparse(w, u, v)):
            add_scaled(acc, ONE, part.items())
        return drop_zeros(acc)

    def evaluate(self, u: Sequence[Fraction], v: Sequence[Fraction], w: Sequence[Fraction]) -> Vector:
        """Trilinear extension to arbitrary vectors."""
        n = self.dim
        for arg in (u, v, w):
            check_dim(arg, n, "product argument")
        return to_dense(self.evaluate_sparse(to_sparse(u), to_sparse(v), to_sparse(w)), n)

    def cyclic(self, u: Sequence[Fraction], v: Sequence[Fraction], w: Sequence[Fraction]) -> Vector:
        """{u,v,w}_c = {u,v,w} + {v,w,u} + {w,u,v}."""
        n = self.dim
        for arg in (u, v, w):
            check_dim(arg, n, "product argument")
        return to_dense(self.cyclic_sparse(to_sparse(u), to_sparse(v), to_sparse(w)), n)


def require_involutive(alg: AlgebraSpec, D: LinearMap) -> None:
    if not verify_involutive(alg, D).passed:
        raise DomainError("the product needs an involutive derivation")


def prelie_from_D(alg: AlgebraSpec, D: LinearMap) -> TriProduct:
    """{x,y,z}_D = [Dx, Dy, z]."""
    require_involutive(alg, D)
    n = alg.dim
    e = basis(n)
    images = [D.column(i) for i in range(n)]
    table = {(i, j, k): bracket(alg, images[i], images[j], e[k]) for i, j, k in product(range(n), repeat=3)}
    return TriProduct(n, table, name=f"{{}}_D on {alg.name}", labels=alg.labels)


def prelie_compatible(alg: AlgebraSpec, D: LinearMap) -> TriProduct:
    """{x,y,z}_A = D[x, y, Dz]."""
    require_involutive(alg, D)
    n = alg.dim
    e = basis(n)
    images = [D.column(i) for i in range(n)]
    table = {(i, j, k): D.apply(bracket(alg, e[i], e[j], images[k])) for i, j, k in product(range(n), repeat=3)}
    result = TriProduct(n, table, name=f"{{}}_A on {alg.name}", labels=alg.labels)
    logger.debug("compatible product on %s: %d nonzero entries", alg.name or "algebra", len(result.table))
    return result
