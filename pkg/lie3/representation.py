"""Representations of 3-Lie algebras, module extensions and ℘-operators."""

import logging
from collections.abc import Sequence
from itertools import combinations

from lie3.algebra import ad, basis, bracket, bracket_basis, labels_of
from lie3.exceptions import ShapeError
from lie3.models import AlgebraSpec, CheckReport, LinearMap, Representation
from lie3.scalars import ZERO, Vector, format_vector, vec_combine

logger = logging.getLogger(__name__)

REP_COMMUTATOR = "[rho(x1,x2),rho(x3,x4)] = rho([x1,x2,x3],x4) - rho([x1,x2,x4],x3)"
REP_PRODUCT = "rho([x1,x2,x3],x4) = rho(x1,x2)rho(x3,x4) + rho(x2,x3)rho(x1,x4) + rho(x3,x1)rho(x2,x4)"
O_OPERATOR = "[Tu,Tv,Tw] = T(rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v)"


def adjoint_representation(alg: AlgebraSpec) -> Representation:
    """(A, ad) with ad(x_i, x_j) = [x_i, x_j, -]."""
    e = basis(alg.dim)
    rho = {(i, j): ad(alg, e[i], e[j]) for i, j in combinations(range(alg.dim), 2)}
    return Representation(alg, alg.dim, rho, name="ad")


def zero_representation(alg: AlgebraSpec, module_dim: int) -> Representation:
    return Representation(alg, module_dim, {}, name="zero")


def verify_representation(alg: AlgebraSpec, rep: Representation) -> CheckReport:
    """Both representation axioms on basis 4-tuples.

    The commutator axiom is enumerated over i1<i2, i3<i4 and the product axiom
    over i1<i2<i3 with any i4.
    """
    n = alg.dim
    if rep.algebra.dim != n:
        raise ShapeError(f"representation is over a dim {rep.algebra.dim} algebra, expected {n}")
    report = CheckReport("representation")
    e = basis(n)
    rho = rep.on_basis
    pairs = list(combinations(range(n), 2))
    for i1, i2 in pairs:
        for i3, i4 in pairs:
            report.checked += 1
            a, b = rho(i1, i2), rho(i3, i4)
            lhs = a @ b - b @ a
            rhs = rep.act(bracket_basis(alg, i1, i2, i3), e[i4]) - rep.act(bracket_basis(alg, i1, i2, i4), e[i3])
            if lhs != rhs:
                report.add_violation(REP_COMMUTATOR, labels_of(alg, (i1, i2, i3, i4)), lhs.describe(), rhs.describe())
    for i1, i2, i3 in combinations(range(n), 3):
        for i4 in range(n):
            report.checked += 1
            lhs = rep.act(bracket_basis(alg, i1, i2, i3), e[i4])
            rhs = rho(i1, i2) @ rho(i3, i4) + rho(i2, i3) @ rho(i1, i4) + rho(i3, i1) @ rho(i2, i4)
            if lhs != rhs:
                report.add_violation(REP_PRODUCT, labels_of(alg, (i1, i2, i3, i4)), lhs.describe(), rhs.describe())
    logger.debug("representation %s: %d tuples checked", rep.name or "rho", report.checked)
    return report


def verify_o_operator(alg: AlgebraSpec, rep: Representation, T: LinearMap) -> CheckReport:
    """℘-operator identity on basis triples u<v<w of the module."""
    n, m = alg.dim, rep.module_dim
    if (T.n_rows, T.n_cols) != (n, m):
        raise ShapeError(f"T is {T.n_rows}x{T.n_cols}, expected {n}x{m}")
    report = CheckReport("o-operator")
    f = basis(m)
    module_labels = [f"v{a + 1}" for a in range(m)]
    for a, b, c in combinations(range(m), 3):
        report.checked += 1
        ta, tb, tc = T.column(a), T.column(b), T.column(c)
        lhs = bracket(alg, ta, tb, tc)
        inner = vec_combine(
            m,
            [
                (1, rep.act_on(ta, tb, f[c])),
                (1, rep.act_on(tb, tc, f[a])),
                (1, rep.act_on(tc, ta, f[b])),
            ],
        )
        rhs = T.apply(inner)
        if lhs != rhs:
            report.add_violation(
                O_OPERATOR,
                (module_labels[a], module_labels[b], module_labels[c]),
                format_vector(lhs, alg.labels),
                format_vector(rhs, alg.labels),
            )
    return report


def semidirect_with(
    alg: AlgebraSpec, rep: Representation, module_labels: Sequence[str] = (), name: str = ""
) -> AlgebraSpec:
    """The extension A ⋉_rho V of dimension n + m.

    [x1,x2,x3] is the bracket of A, [x1,x2,v] = rho(x1,x2)v, and every
    bracket with two or more module arguments vanishes.
    """
    n, m = alg.dim, rep.module_dim
    total = n + m
    labels = tuple(module_labels) or tuple(f"v{a + 1}" for a in range(m))
    if len(labels) != m:
        raise ShapeError(f"{len(labels)} module labels for module dim {m}")
    brackets: dict[tuple[int, int, int], Vector] = {}
    for key, vec in alg.brackets.items():
        brackets[key] = tuple(vec) + (ZERO,) * m
    for (i, j), mat in rep.rho.items():
        for a in range(m):
            image = mat.column(a)
            if any(image):
                brackets[(i, j, n + a)] = (ZERO,) * n + image
    return AlgebraSpec(total, brackets, name or f"{alg.name}⋉{rep.name}", alg.labels + labels)
