"""3-pre-Lie axioms, sub-adjacent algebras and the checks tied to an involutive derivation."""

import logging
from itertools import combinations, product

from derivations.lab import eigensplit
from lie3.algebra import basis, bracket
from lie3.exceptions import DomainError
from lie3.models import AlgebraSpec, CheckReport, LinearMap
from lie3.scalars import (
    ONE,
    SparseVector,
    accumulate,
    add_scaled,
    drop_zeros,
    format_vector,
    to_dense,
    vec_neg,
    vec_scale,
    zero_vector,
)
from prelie.products import TriProduct, require_involutive, prelie_from_D

logger = logging.getLogger(__name__)

PRE1 = "{x1,x2,x3} = -{x2,x1,x3}"
PRE2 = "{x1,x2,{x3,x4,x5}} = {{x1,x2,x3}_c,x4,x5} + {x3,{x1,x2,x4}_c,x5} + {x3,x4,{x1,x2,x5}}"
PRE3 = "{{x1,x2,x3}_c,x4,x5} = {x1,x2,{x3,x4,x5}} + {x2,x3,{x1,x4,x5}} + {x3,x1,{x2,x4,x5}}"


def _total(*parts: SparseVector) -> SparseVector:
    acc: SparseVector = {}
    for part in parts:
        add_scaled(acc, ONE, part.items())
    return drop_zeros(acc)


_Terms = dict[tuple[int, ...], SparseVector]


def _grouped(table, slot: int) -> dict[int, list]:
    grouped: dict[int, list] = {}
    for key, entries in table.items():
        grouped.setdefault(key[slot], []).append((key[:slot] + key[slot + 1:], entries))
    return grouped


def verify_prelie(P: TriProduct) -> CheckReport:
    """First-slot antisymmetry on all triples, then both five-variable identities on all n⁵ tuples.

    Every term of the five-variable identities is expanded from the nonzero
    entries of {-,-,-} and {-,-,-}_c into a table keyed by (x1, ..., x5);
    a tuple missing from all tables holds with both sides zero.
    """
    n = P.dim
    labels = P.labels
    table = P.sparse_table
    report = CheckReport("pre-lie")
    anti = report.add_child(CheckReport("pre1"))
    for i, j, k in product(range(n), repeat=3):
        anti.checked += 1
        lhs, rhs = P.product(i, j, k), vec_neg(P.product(j, i, k))
        if lhs != rhs:
            anti.add_violation(PRE1, (labels[i], labels[j], labels[k]), format_vector(lhs, labels), format_vector(rhs, labels))

    unit = [{i: ONE} for i in range(n)]
    cyc = {}
    for t in product(range(n), repeat=3):
        value = P.cyclic_sparse(unit[t[0]], unit[t[1]], unit[t[2]])
        if value:
            cyc[t] = tuple(value.items())
    first, middle, last = _grouped(table, 0), _grouped(table, 1), _grouped(table, 2)

    nested: _Terms = {}  # {x1,x2,{x3,x4,x5}}
    rotated_b: _Terms = {}  # {x2,x3,{x1,x4,x5}}
    rotated_c: _Terms = {}  # {x3,x1,{x2,x4,x5}}
    tail: _Terms = {}  # {x3,x4,{x1,x2,x5}}
    for (i, j, k), entries in table.items():
        for l, c in entries:
            for (g, h), outer in last.get(l, ()):
                accumulate(nested, (g, h, i, j, k), c, outer)
                accumulate(rotated_b, (i, g, h, j, k), c, outer)
                accumulate(rotated_c, (h, i, g, j, k), c, outer)
                accumulate(tail, (i, j, g, h, k), c, outer)
    shifted: _Terms = {}  # {{x1,x2,x3}_c,x4,x5}
    middle_cyc: _Terms = {}  # {x3,{x1,x2,x4}_c,x5}
    for (i, j, k), entries in cyc.items():
        for l, c in entries:
            for (g, h), outer in first.get(l, ()):
                accumulate(shifted, (i, j, k, g, h), c, outer)
            for (g, h), outer in middle.get(l, ()):
                accumulate(middle_cyc, (i, j, g, k, h), c, outer)

    def show(v: SparseVector) -> str:
        return format_vector(to_dense(v, n), labels)

    for name, identity, lhs_terms, rhs_terms in (
        ("pre2", PRE2, nested, (shifted, middle_cyc, tail)),
        ("pre3", PRE3, shifted, (nested, rotated_b, rotated_c)),
    ):
        child = report.add_child(CheckReport(name, checked=n**5))
        keys = set(lhs_terms).union(*rhs_terms)
        for key in sorted(keys):
            lhs = drop_zeros(lhs_terms.get(key, {}))
            rhs = _total(*(terms.get(key, {}) for terms in rhs_terms))
            if lhs != rhs:
                child.add_violation(identity, tuple(labels[i] for i in key), show(lhs), show(rhs))
    logger.debug("pre-lie axioms on %s: %d tuples", P.name or "product", n**5)
    return report


def subadjacent(P: TriProduct, name: str = "") -> AlgebraSpec:
    """The 3-Lie algebra with bracket {x,y,z}_c."""
    if not verify_prelie(P).passed:
        raise DomainError("sub-adjacent algebra needs a 3-pre-Lie product")
    return subadjacent_unchecked(P, name)


def subadjacent_unchecked(P: TriProduct, name: str = "") -> AlgebraSpec:
    e = basis(P.dim)
    brackets = {t: P.cyclic(e[t[0]], e[t[1]], e[t[2]]) for t in combinations(range(P.dim), 3)}
    return AlgebraSpec(P.dim, brackets, name or f"{P.name} sub-adjacent", P.labels)


def verify_D_isomorphism(alg: AlgebraSpec, D: LinearMap) -> CheckReport:
    """{x,y,z}_Dc = D[Dx,Dy,Dz] and D{x,y,z}_Dc = [Dx,Dy,Dz] on all ordered basis triples."""
    require_involutive(alg, D)
    n = alg.dim
    e = basis(n)
    labels = alg.labels
    images = [D.column(i) for i in range(n)]
    P = prelie_from_D(alg, D)
    report = CheckReport("d-isomorphism")
    formula = report.add_child(CheckReport("{}_Dc = D[D,D,D]"))
    iso = report.add_child(CheckReport("D{}_Dc = [D,D,D]"))
    for i, j, k in product(range(n), repeat=3):
        witness = (labels[i], labels[j], labels[k])
        cyc = P.cyclic(e[i], e[j], e[k])
        image_bracket = bracket(alg, images[i], images[j], images[k])
        formula.checked += 1
        expected = D.apply(image_bracket)
        if cyc != expected:
            formula.add_violation("{x,y,z}_Dc = D[Dx,Dy,Dz]", witness, format_vector(cyc, labels), format_vector(expected, labels))
        iso.checked += 1
        mapped = D.apply(cyc)
        if mapped != image_bracket:
            iso.add_violation("D{x,y,z}_Dc = [Dx,Dy,Dz]", witness, format_vector(mapped, labels), format_vector(image_bracket, labels))
    return report


def piecewise_check(alg: AlgebraSpec, D: LinearMap) -> CheckReport:
    """Case tables of {}_D and {}_Dc on eigenbasis triples.

    Pure triples (all in A_1 or all in A_-1) give 0. A mixed triple gives
    ε_x ε_y [x,y,z] for {}_D and -[x,y,z] for {}_Dc.
    """
    split = eigensplit(alg, D)
    P = prelie_from_D(alg, D)
    labels = alg.labels
    eig = split.eigenbasis()
    zero = zero_vector(alg.dim)
    report = CheckReport("piecewise")
    d_table = report.add_child(CheckReport("{}_D cases"))
    dc_table = report.add_child(CheckReport("{}_Dc cases"))
    for (x, ex), (y, ey), (z, ez) in product(eig, repeat=3):
        witness = tuple(format_vector(v, labels) for v in (x, y, z))
        pure = ex == ey == ez
        plain = bracket(alg, x, y, z)
        d_table.checked += 1
        value = P.evaluate(x, y, z)
        expected = zero if pure else vec_scale(ex * ey, plain)
        if value != expected:
            d_table.add_violation("{x,y,z}_D piecewise", witness, format_vector(value, labels), format_vector(expected, labels))
        dc_table.checked += 1
        value = P.cyclic(x, y, z)
        expected = zero if pure else vec_neg(plain)
        if value != expected:
            dc_table.add_violation("{x,y,z}_Dc piecewise", witness, format_vector(value, labels), format_vector(expected, labels))
    return report
