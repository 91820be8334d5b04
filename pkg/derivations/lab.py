"""Derivations, involutive derivations and their eigenspace splits."""

import logging
from itertools import combinations

from derivations.models import EigenSplit
from lie3.algebra import basis, bracket, bracket_basis, labels_of
from lie3.exceptions import CapacityError, DomainError, ShapeError
from lie3.linalg import in_span, kernel, nullspace
from lie3.models import AlgebraSpec, CheckReport, LinearMap
from lie3.scalars import ZERO, format_vector, vec_combine

logger = logging.getLogger(__name__)

DERIVATION = "D[x,y,z] = [Dx,y,z] + [x,Dy,z] + [x,y,Dz]"
DD_IDENTITY = "[Dx,Dy,Dz] = D([Dx,Dy,z] + [Dy,Dz,x] + [Dz,Dx,y])"
SEARCH_MAX_DIM = 24


def _check_square(alg: AlgebraSpec, D: LinearMap) -> None:
    if (D.n_rows, D.n_cols) != (alg.dim, alg.dim):
        raise ShapeError(f"map is {D.n_rows}x{D.n_cols}, algebra has dim {alg.dim}")


def verify_derivation(alg: AlgebraSpec, D: LinearMap) -> CheckReport:
    """Derivation law on all basis triples i<j<k."""
    _check_square(alg, D)
    n = alg.dim
    e = basis(n)
    images = [D.column(i) for i in range(n)]
    report = CheckReport("derivation")
    for i, j, k in combinations(range(n), 3):
        report.checked += 1
        lhs = D.apply(bracket_basis(alg, i, j, k))
        rhs = vec_combine(
            n,
            [
                (1, bracket(alg, images[i], e[j], e[k])),
                (1, bracket(alg, e[i], images[j], e[k])),
                (1, bracket(alg, e[i], e[j], images[k])),
            ],
        )
        if lhs != rhs:
            report.add_violation(
                DERIVATION, labels_of(alg, (i, j, k)), format_vector(lhs, alg.labels), format_vector(rhs, alg.labels)
            )
    return report


def derivation_space(alg: AlgebraSpec) -> list[LinearMap]:
    """RREF basis of Der(A), solving the derivation law for the n² matrix entries.

    Unknown d[m][i] (row m, column i) sits at coordinate m*n + i.
    """
    n = alg.dim
    rows = []
    for i, j, k in combinations(range(n), 3):
        for l in range(n):
            row = [ZERO] * (n * n)
            for m, c in enumerate(bracket_basis(alg, i, j, k)):
                if c:
                    row[l * n + m] += c
            for m in range(n):
                row[m * n + i] -= bracket_basis(alg, m, j, k)[l]
                row[m * n + j] -= bracket_basis(alg, i, m, k)[l]
                row[m * n + k] -= bracket_basis(alg, i, j, m)[l]
            if any(row):
                rows.append(tuple(row))
    solutions = nullspace(rows, n * n)
    logger.debug("derivation_space: %d equations, dim Der = %d", len(rows), len(solutions))
    return [LinearMap.unflatten(v, n) for v in solutions]


def is_derivation_in_span(alg: AlgebraSpec, D: LinearMap, space: list[LinearMap] | None = None) -> bool:
    _check_square(alg, D)
    space = derivation_space(alg) if space is None else space
    return in_span([m.flatten() for m in space], D.flatten(), alg.dim * alg.dim)


def verify_involutive(alg: AlgebraSpec, D: LinearMap) -> CheckReport:
    """Derivation law plus D·D = I exactly."""
    _check_square(alg, D)
    report = CheckReport("involutive")
    report.add_child(verify_derivation(alg, D))
    square = report.add_child(CheckReport("square", checked=1))
    product = D @ D
    if not product.is_identity():
        square.add_violation("D^2 = I", ("D",), product.describe(), LinearMap.identity(alg.dim).describe())
    return report


def eigensplit(alg: AlgebraSpec, D: LinearMap) -> EigenSplit:
    """A_1 = ker(D - I), A_-1 = ker(D + I), both abelian."""
    if not verify_involutive(alg, D).passed:
        raise DomainError("eigensplit needs an involutive derivation")
    n = alg.dim
    identity = LinearMap.identity(n)
    split = EigenSplit(kernel((D - identity).rows, n), kernel((D + identity).rows, n))
    if split.plus.rank + split.minus.rank != n:
        raise DomainError(f"eigenspaces have dims {split.plus.rank} + {split.minus.rank} != {n}")
    for part, space in (("A_1", split.plus), ("A_-1", split.minus)):
        for u, v, w in combinations(space.basis, 3):
            if any(bracket(alg, u, v, w)):
                raise DomainError(f"{part} is not an abelian subalgebra")
    return split


def _sign_constraints(alg: AlgebraSpec) -> dict[int, list[tuple[int, int, int, int]]]:
    """ε_l = ε_i + ε_j + ε_k for each nonzero c_ijk^l, grouped by the largest index involved."""
    by_last: dict[int, list[tuple[int, int, int, int]]] = {}
    for (i, j, k), vec in alg.brackets.items():
        for l, c in enumerate(vec):
            if c:
                by_last.setdefault(max(i, j, k, l), []).append((i, j, k, l))
    return by_last


def diagonal_sign_patterns(alg: AlgebraSpec, max_dim: int = SEARCH_MAX_DIM) -> list[tuple[int, ...]]:
    """All ±1 patterns ε with diag(ε) an involutive derivation, + before - lexicographically.

    A diagonal ±1 map squares to I, and it is a derivation exactly when every
    sign constraint holds, so a depth-first search in slot order prunes as
    soon as a constraint closes.
    """
    n = alg.dim
    if n > max_dim:
        raise CapacityError(f"diagonal search is bounded to dim {max_dim}, got {n}")
    constraints = _sign_constraints(alg)
    found: list[tuple[int, ...]] = []
    signs = [0] * n

    def extend(pos: int) -> None:
        if pos == n:
            found.append(tuple(signs))
            return
        for s in (1, -1):
            signs[pos] = s
            if all(signs[l] == signs[i] + signs[j] + signs[k] for i, j, k, l in constraints.get(pos, ())):
                extend(pos + 1)
        signs[pos] = 0

    extend(0)
    logger.debug("diagonal search on %s: %d witnesses", alg.name or "algebra", len(found))
    return found


def search_involutive_diagonal(alg: AlgebraSpec, max_dim: int = SEARCH_MAX_DIM) -> list[LinearMap]:
    return [LinearMap.diagonal(p) for p in diagonal_sign_patterns(alg, max_dim)]


def verify_dd_identity(alg: AlgebraSpec, D: LinearMap) -> CheckReport:
    """[Dx,Dy,Dz] = D([Dx,Dy,z] + [Dy,Dz,x] + [Dz,Dx,y]) on basis triples."""
    _check_square(alg, D)
    n = alg.dim
    e = basis(n)
    images = [D.column(i) for i in range(n)]
    report = CheckReport("dd-identity")
    for i, j, k in combinations(range(n), 3):
        report.checked += 1
        lhs = bracket(alg, images[i], images[j], images[k])
        inner = vec_combine(
            n,
            [
                (1, bracket(alg, images[i], images[j], e[k])),
                (1, bracket(alg, images[j], images[k], e[i])),
                (1, bracket(alg, images[k], images[i], e[j])),
            ],
        )
        rhs = D.apply(inner)
        if lhs != rhs:
            report.add_violation(
                DD_IDENTITY, labels_of(alg, (i, j, k)), format_vector(lhs, alg.labels), format_vector(rhs, alg.labels)
            )
    return report
