"""Brackets, the Filippov identity and the basic invariants of a 3-Lie algebra."""

import logging
from collections.abc import Mapping, Sequence
from fractions import Fraction
from itertools import combinations, permutations
from math import comb

from lie3.linalg import kernel, rank, span
from lie3.models import AlgebraSpec, CheckReport, LinearMap, Subspace, Triple, permutation_sign
from lie3.scalars import (
    ZERO,
    SparseVector,
    Vector,
    accumulate,
    basis_vector,
    check_dim,
    drop_zeros,
    format_vector,
    support,
    to_dense,
    zero_vector,
)

logger = logging.getLogger(__name__)

FILIPPOV = "[x1,x2,[x3,x4,x5]] = [[x1,x2,x3],x4,x5] + [x3,[x1,x2,x4],x5] + [x3,x4,[x1,x2,x5]]"


def bracket(alg: AlgebraSpec, u: Sequence[Fraction], v: Sequence[Fraction], w: Sequence[Fraction]) -> Vector:
    """Trilinear, totally antisymmetric extension of the structure constants."""
    n = alg.dim
    for arg in (u, v, w):
        check_dim(arg, n, "bracket argument")
    table = alg.signed_table
    acc = [ZERO] * n
    if not table:
        return tuple(acc)
    sv, sw = support(v), support(w)
    for i, a in support(u):
        for j, b in sv:
            if i == j:
                continue
            ab = a * b
            for k, c in sw:
                entry = table.get((i, j, k))
                if entry is None:
                    continue
                coeff = ab * c
                for l, d in entry:
                    acc[l] += coeff * d
    return tuple(acc)


def bracket_basis(alg: AlgebraSpec, i: int, j: int, k: int) -> Vector:
    """[x_i, x_j, x_k] for 0-based basis indices."""
    out = [ZERO] * alg.dim
    for l, d in alg.signed_table.get((i, j, k), ()):
        out[l] = d
    return tuple(out)


def basis(n: int) -> list[Vector]:
    return [basis_vector(n, i) for i in range(n)]


def ad(alg: AlgebraSpec, u: Sequence[Fraction], v: Sequence[Fraction]) -> LinearMap:
    """The inner derivation w -> [u, v, w]."""
    return LinearMap.from_columns([bracket(alg, u, v, e) for e in basis(alg.dim)])


def labels_of(alg: AlgebraSpec, indices: Sequence[int]) -> tuple[str, ...]:
    return tuple(alg.labels[i] for i in indices)


def _by_slot(table: Mapping[Triple, tuple[tuple[int, Fraction], ...]], slot: int) -> dict[int, list]:
    """Entries of a product table grouped by the index in one slot, with the other two kept in order."""
    grouped: dict[int, list] = {}
    for key, entries in table.items():
        rest = key[:slot] + key[slot + 1:]
        grouped.setdefault(key[slot], []).append((rest, entries))
    return grouped


def verify_filippov(alg: AlgebraSpec) -> CheckReport:
    """Filippov identity on basis 5-tuples with i1<i2 and i3<i4<i5.

    Each of the four terms is expanded from the nonzero structure constants
    into a table keyed by the 5-tuple; tuples absent from every table hold
    trivially.
    """
    n = alg.dim
    report = CheckReport("filippov", checked=comb(n, 2) * comb(n, 3))
    table = alg.signed_table
    first, middle, last = _by_slot(table, 0), _by_slot(table, 1), _by_slot(table, 2)
    lhs: dict[tuple[int, ...], SparseVector] = {}
    rhs: dict[tuple[int, ...], SparseVector] = {}
    for (i3, i4, i5), entries in table.items():
        if not i3 < i4 < i5:
            continue
        for l, c in entries:
            for (i1, i2), outer in last.get(l, ()):
                if i1 < i2:
                    accumulate(lhs, (i1, i2, i3, i4, i5), c, outer)
    for (i1, i2, j), entries in table.items():
        if not i1 < i2:
            continue
        for l, c in entries:
            for (i4, i5), outer in first.get(l, ()):
                if j < i4 < i5:
                    accumulate(rhs, (i1, i2, j, i4, i5), c, outer)
            for (i3, i5), outer in middle.get(l, ()):
                if i3 < j < i5:
                    accumulate(rhs, (i1, i2, i3, j, i5), c, outer)
            for (i3, i4), outer in last.get(l, ()):
                if i3 < i4 < j:
                    accumulate(rhs, (i1, i2, i3, i4, j), c, outer)
    for key in sorted(lhs.keys() | rhs.keys()):
        left, right = drop_zeros(lhs.get(key, {})), drop_zeros(rhs.get(key, {}))
        if left != right:
            report.add_violation(
                FILIPPOV,
                labels_of(alg, key),
                format_vector(to_dense(left, n), alg.labels),
                format_vector(to_dense(right, n), alg.labels),
            )
    logger.debug("filippov on %s: %d tuples, %d violations", alg.name or "algebra", report.checked, len(report.violations))
    return report


def verify_antisymmetry(alg: AlgebraSpec) -> CheckReport:
    """Stored triples are canonical and every signed reordering of the bracket agrees."""
    n = alg.dim
    report = CheckReport("antisymmetry")
    for key in alg.brackets:
        if not (len(key) == 3 and 0 <= key[0] < key[1] < key[2] < n):
            report.add_violation("stored triple i<j<k in range", tuple(str(i + 1) for i in key), str(key), "i<j<k")
    e = basis(n)
    for triple in combinations(range(n), 3):
        base = bracket(alg, *(e[i] for i in triple))
        for perm in permutations(triple):
            report.checked += 1
            value = bracket(alg, *(e[i] for i in perm))
            expected = base if permutation_sign(perm) > 0 else tuple(-a for a in base)
            if value != expected:
                report.add_violation(
                    "[xσ1,xσ2,xσ3] = sgn(σ)[x1,x2,x3]",
                    labels_of(alg, perm),
                    format_vector(value, alg.labels),
                    format_vector(expected, alg.labels),
                )
    zero = zero_vector(n)
    for i in range(n):
        for k in range(n):
            report.checked += 1
            value = bracket(alg, e[i], e[i], e[k])
            if value != zero:
                report.add_violation("[x,x,y] = 0", labels_of(alg, (i, i, k)), format_vector(value, alg.labels), "0")
    return report


def derived_algebra(alg: AlgebraSpec) -> Subspace:
    """A^1: span of all brackets, closed under the bracket to a fixpoint."""
    n = alg.dim
    current = span(list(alg.brackets.values()), n)
    e = basis(n)
    while True:
        generated = [
            bracket(alg, b, e[j], e[k]) for b in current.basis for j, k in combinations(range(n), 2)
        ]
        grown = span(list(current.basis) + generated, n)
        if grown.rank == current.rank:
            return current
        current = grown


def center(alg: AlgebraSpec) -> Subspace:
    """Z(A) = {z : [z, x_i, x_j] = 0 for all i < j}."""
    n = alg.dim
    rows: list[Vector] = []
    for j, k in combinations(range(n), 2):
        columns = [bracket_basis(alg, i, j, k) for i in range(n)]
        rows.extend(zip(*columns))
    return kernel(rows, n)


def is_closed(alg: AlgebraSpec, space: Subspace) -> bool:
    """Whether [space, A, A] lies in space."""
    n = alg.dim
    e = basis(n)
    images = [bracket(alg, b, e[j], e[k]) for b in space.basis for j, k in combinations(range(n), 2)]
    return rank(list(space.basis) + images, n) == space.rank
