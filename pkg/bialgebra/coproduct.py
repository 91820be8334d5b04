"""Coproducts Δ = Δ1 + Δ2 + Δ3 and the local cocycle 3-Lie bialgebra checks."""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from bialgebra.cybe import is_skew, verify_cybe
from bialgebra.double import DoubleSpace, semidirect
from derivations.lab import verify_involutive
from lie3.algebra import bracket_basis, labels_of, verify_filippov
from lie3.exceptions import DomainError, ShapeError
from lie3.models import AlgebraSpec, CheckReport, LinearMap
from lie3.scalars import ONE, ZERO, support
from lie3.tensor import Tensor, alternating_part, format_tensor, permute_factors
from prelie.products import prelie_compatible, prelie_from_D

logger = logging.getLogger(__name__)

COCYCLE = "f([a,b,c]) = rho(a,b)f(c) + rho(b,c)f(a) + rho(c,a)f(b)"


@dataclass(frozen=True)
class Coproduct:
    """A linear map B -> B⊗B⊗B given on basis vectors.

    images holds the nonzero images by basis index. parts, when present, are
    Δ1, Δ2, Δ3 with Δ = Δ1 + Δ2 + Δ3.
    """

    dim: int
    images: Mapping[int, Tensor] = field(default_factory=dict)
    labels: tuple[str, ...] = field(default=(), compare=False)
    parts: tuple["Coproduct", ...] = field(default=(), compare=False)

    def __post_init__(self):
        clean: dict[int, Tensor] = {}
        for k, t in self.images.items():
            if not 0 <= k < self.dim:
                raise ShapeError(f"coproduct index {k + 1} out of range 1..{self.dim}")
            if (t.rank, t.dim) != (3, self.dim):
                raise ShapeError(f"image of {k + 1} must be rank 3 over dim {self.dim}")
            if not t.is_zero():
                clean[k] = t
        object.__setattr__(self, "images", dict(sorted(clean.items())))
        object.__setattr__(self, "labels", tuple(self.labels) or tuple(f"e{k + 1}" for k in range(self.dim)))

    def image(self, k: int) -> Tensor:
        return self.images.get(k) or Tensor.zero(3, self.dim)

    def apply(self, v: Sequence[Fraction]) -> Tensor:
        """Δ extended linearly to a coordinate vector."""
        result = Tensor.zero(3, self.dim)
        for k, c in support(v):
            if k in self.images:
                result = result + self.images[k].scale(c)
        return result

    def is_zero(self) -> bool:
        return not self.images

    def map_images(self, fn) -> "Coproduct":
        return Coproduct(self.dim, {k: fn(t) for k, t in self.images.items()}, self.labels)

    def __add__(self, other: "Coproduct") -> "Coproduct":
        if self.dim != other.dim:
            raise ShapeError(f"coproduct dims {self.dim} and {other.dim} differ")
        keys = set(self.images) | set(other.images)
        return Coproduct(self.dim, {k: self.image(k) + other.image(k) for k in keys}, self.labels)


def _assemble(delta1: Coproduct) -> Coproduct:
    """Δ2 = φ13 φ12 Δ1 and Δ3 = φ12 φ13 Δ1, composed right to left."""
    delta2 = delta1.map_images(lambda t: permute_factors(permute_factors(t, 1, 2), 1, 3))
    delta3 = delta1.map_images(lambda t: permute_factors(permute_factors(t, 1, 3), 1, 2))
    total = delta1 + delta2 + delta3
    return Coproduct(total.dim, total.images, delta1.labels, parts=(delta1, delta2, delta3))


def coproduct_from_r(B: AlgebraSpec, r: Tensor) -> Coproduct:
    """Δ1(x) = Σ μ(x,u_i,u_j)⊗v_j⊗v_i over the monomials r = Σ u_i⊗v_i."""
    if r.rank != 2 or r.dim != B.dim:
        raise ShapeError(f"r must be rank 2 over dim {B.dim}, got rank {r.rank} dim {r.dim}")
    if not is_skew(r):
        raise DomainError("coproduct_from_r needs a skew-symmetric r")
    if not verify_cybe(B, r).passed:
        raise DomainError("r does not solve the classical Yang-Baxter equation")
    table = B.signed_table
    monomials = r.items()
    images: dict[int, Tensor] = {}
    for x in range(B.dim):
        terms = []
        for (a, b), rab in monomials:
            for (c, d), rcd in monomials:
                for l, m in table.get((x, a, c), ()):
                    terms.append(((l, d, b), rab * rcd * m))
        images[x] = Tensor.from_terms(3, B.dim, terms)
    logger.debug("coproduct from r: %d monomials in r", len(monomials))
    return _assemble(Coproduct(B.dim, images, B.labels))


def coproduct_via_split(alg: AlgebraSpec, D: LinearMap) -> Coproduct:
    """Δ1 from the block expansion over P = {i : Dx_i = x_i} and M = {i : Dx_i = -x_i}.

    For each pair of blocks (I, ε_I), (J, ε_J) and i in I, j in J:
    -ε_I ε_J μ(x,x_i*,x_j)⊗x_j*⊗x_i - ε_I ε_J μ(x,x_i,x_j*)⊗x_j⊗x_i*
    + ε_I ε_J μ(x,x_i,x_j)⊗x_j*⊗x_i*. The μ(x,x_i*,x_j*) block vanishes.
    """
    if not verify_involutive(alg, D).passed:
        raise DomainError("the split route needs an involutive derivation")
    signs = D.diagonal_entries()
    if signs is None:
        raise DomainError("the split route needs D diagonal in the given basis")
    n = alg.dim
    B = semidirect(alg)
    table = B.signed_table
    blocks = (([i for i in range(n) if signs[i] == 1], 1), ([i for i in range(n) if signs[i] == -1], -1))
    images: dict[int, Tensor] = {}
    for x in range(B.dim):
        terms = []
        for I, eps_i in blocks:
            for J, eps_j in blocks:
                sign = eps_i * eps_j
                for i in I:
                    for j in J:
                        for l, m in table.get((x, n + i, j), ()):
                            terms.append(((l, n + j, i), -sign * m))
                        for l, m in table.get((x, i, n + j), ()):
                            terms.append(((l, j, n + i), -sign * m))
                        for l, m in table.get((x, i, j), ()):
                            terms.append(((l, n + j, n + i), sign * m))
        images[x] = Tensor.from_terms(3, B.dim, terms)
    return _assemble(Coproduct(B.dim, images, B.labels))


def coproduct_via_products(alg: AlgebraSpec, D: LinearMap) -> Coproduct:
    """Δ1, Δ2 and Δ3 read off the products P = {}_D and Q = {}_A for any involutive D.

    On x_k and x_k* of the double space:
    Δ1(x_k) = Σ_{i,j} P(x_i,x_j,x_k)⊗x_j*⊗x_i* + x_i*⊗Q(x_i,x_k,x_j)⊗x_j* - x_i*⊗x_j*⊗Q(x_i,x_k,x_j),
    Δ1(x_k*) = -Σ_{i,j,l} P(x_i,x_j,x_l)_k x_l*⊗x_j*⊗x_i*.
    Every monomial a⊗b⊗c of Δ1 enters Δ2 as c⊗a⊗b and Δ3 as b⊗c⊗a.
    """
    P, Q = prelie_from_D(alg, D), prelie_compatible(alg, D)
    n = alg.dim
    double = DoubleSpace(alg)
    parts: tuple[dict[int, list], ...] = ({}, {}, {})

    def place(k: int, coeff: Fraction, first, second, third) -> None:
        for i, a in first:
            for j, b in second:
                for l, c in third:
                    value = coeff * a * b * c
                    parts[0].setdefault(k, []).append(((i, j, l), value))
                    parts[1].setdefault(k, []).append(((l, i, j), value))
                    parts[2].setdefault(k, []).append(((j, l, i), value))

    def star(i: int) -> tuple[tuple[int, Fraction], ...]:
        return ((n + i, ONE),)

    for (i, j, k), entries in P.sparse_table.items():
        place(k, ONE, entries, star(j), star(i))
        for m, c in entries:
            place(n + m, -c, star(k), star(j), star(i))
    for (i, k, j), entries in Q.sparse_table.items():
        place(k, ONE, star(i), entries, star(j))
        place(k, -ONE, star(i), star(j), entries)
    built = tuple(
        Coproduct(double.dim, {k: Tensor.from_terms(3, double.dim, t) for k, t in terms.items()}, double.labels)
        for terms in parts
    )
    total = built[0] + built[1] + built[2]
    return Coproduct(total.dim, total.images, double.labels, parts=built)


def act_in_slot(B: AlgebraSpec, a: int, b: int, t: Tensor, slot: int) -> Tensor:
    """ad(x_a, x_b) applied to tensor slot `slot` (1-based), identity elsewhere."""
    entry_table = B.signed_table
    pos = slot - 1
    terms = []
    for index, coeff in t.items():
        for l, d in entry_table.get((a, b, index[pos]), ()):
            terms.append((index[:pos] + (l,) + index[pos + 1:], coeff * d))
    return Tensor.from_terms(t.rank, t.dim, terms)


def verify_cocycle(B: AlgebraSpec, delta_part: Coproduct, slot: int) -> CheckReport:
    """1-cocycle identity for (B⊗B⊗B, ad in `slot`) on basis triples a<b<c."""
    if slot not in (1, 2, 3):
        raise ShapeError(f"slot must be 1, 2 or 3, got {slot}")
    if delta_part.dim != B.dim:
        raise ShapeError(f"coproduct dim {delta_part.dim} does not match algebra dim {B.dim}")
    table = B.signed_table
    images = delta_part.images
    pos = slot - 1
    report = CheckReport(f"cocycle-{slot}")
    for a, b, c in combinations(range(B.dim), 3):
        report.checked += 1
        residual: dict[tuple[int, ...], Fraction] = {}
        for l, m in table.get((a, b, c), ()):
            if l in images:
                for index, coeff in images[l].iter_entries():
                    residual[index] = residual.get(index, ZERO) + m * coeff
        for p, q, s in ((a, b, c), (b, c, a), (c, a, b)):
            if s not in images:
                continue
            for index, coeff in images[s].iter_entries():
                for l, d in table.get((p, q, index[pos]), ()):
                    key = index[:pos] + (l,) + index[pos + 1:]
                    residual[key] = residual.get(key, ZERO) - coeff * d
        if not any(residual.values()):
            continue
        lhs = delta_part.apply(bracket_basis(B, a, b, c))
        rhs = (
            act_in_slot(B, a, b, delta_part.image(c), slot)
            + act_in_slot(B, b, c, delta_part.image(a), slot)
            + act_in_slot(B, c, a, delta_part.image(b), slot)
        )
        report.add_violation(
            COCYCLE, labels_of(B, (a, b, c)), format_tensor(lhs, B.labels), format_tensor(rhs, B.labels)
        )
    return report


def dual_labels(labels: Iterable[str]) -> tuple[str, ...]:
    return tuple(f"<{l}>" for l in labels)


def dual_bracket(delta: Coproduct) -> AlgebraSpec:
    """Δ*(f_a, f_b, f_c) = Σ_k Δ(e_k)[a,b,c] f_k on the dual basis."""
    for k, t in delta.images.items():
        if not alternating_part(t)[1]:
            raise DomainError(f"image of {delta.labels[k]} is not alternating")
    n = delta.dim
    brackets: dict[tuple[int, int, int], list[Fraction]] = {}
    for k, t in delta.images.items():
        for (a, b, c), coeff in t.items():
            if a < b < c:
                brackets.setdefault((a, b, c), [Fraction(0)] * n)[k] += coeff
    return AlgebraSpec(n, {key: tuple(v) for key, v in brackets.items()}, "dual", dual_labels(delta.labels))


def verify_alternating(delta: Coproduct) -> CheckReport:
    report = CheckReport("alternating")
    for k in range(delta.dim):
        report.checked += 1
        t = delta.image(k)
        alt, ok = alternating_part(t)
        if not ok:
            report.add_violation(
                "Δ(x) is alternating", (delta.labels[k],), format_tensor(t, delta.labels), format_tensor(alt, delta.labels)
            )
    return report


def verify_local_cocycle_bialgebra(B: AlgebraSpec, delta: Coproduct) -> CheckReport:
    """B is 3-Lie, Δ1/Δ2/Δ3 are 1-cocycles, Δ is alternating and its dual is 3-Lie."""
    report = CheckReport("local-cocycle-bialgebra")
    report.add_child(verify_filippov(B))
    if len(delta.parts) == 3:
        for slot, part in enumerate(delta.parts, start=1):
            report.add_child(verify_cocycle(B, part, slot))
    else:
        missing = report.add_child(CheckReport("cocycle"))
        missing.add_violation("Δ = Δ1 + Δ2 + Δ3", ("Δ",), "no parts", "three parts")
    alternating = report.add_child(verify_alternating(delta))
    if alternating.passed:
        dual = verify_filippov(dual_bracket(delta))
        dual.name = "dual-filippov"
        report.add_child(dual)
    else:
        dual = report.add_child(CheckReport("dual-filippov"))
        dual.add_violation("Δ* is defined", ("Δ",), "non-alternating image", "alternating images")
    return report


def verify_slot_representation(B: AlgebraSpec, slot: int) -> CheckReport:
    """Representation axioms for ad acting in one slot of B⊗B⊗B.

    Checked on monomials whose acted slot runs over the basis and whose other
    slots are e_1. Diagnostic only.
    """
    if slot not in (1, 2, 3):
        raise ShapeError(f"slot must be 1, 2 or 3, got {slot}")
    n = B.dim
    report = CheckReport(f"slot-representation-{slot}")

    def rho(a: int, b: int, t: Tensor) -> Tensor:
        return act_in_slot(B, a, b, t, slot)

    def rho_vec(u, b: int, t: Tensor) -> Tensor:
        out = Tensor.zero(3, n)
        for a, c in support(u):
            out = out + rho(a, b, t).scale(c)
        return out

    monomials = []
    for m in range(n):
        index = [0, 0, 0]
        index[slot - 1] = m
        monomials.append(Tensor.monomial(n, index))
    pairs = list(combinations(range(n), 2))
    for i1, i2 in pairs:
        for i3, i4 in pairs:
            for t in monomials:
                report.checked += 1
                lhs = rho(i1, i2, rho(i3, i4, t)) - rho(i3, i4, rho(i1, i2, t))
                rhs = rho_vec(bracket_basis(B, i1, i2, i3), i4, t) - rho_vec(bracket_basis(B, i1, i2, i4), i3, t)
                if lhs != rhs:
                    report.add_violation(
                        "[rho(x1,x2),rho(x3,x4)] = rho([x1,x2,x3],x4) - rho([x1,x2,x4],x3)",
                        labels_of(B, (i1, i2, i3, i4)),
                        format_tensor(lhs, B.labels),
                        format_tensor(rhs, B.labels),
                    )
    for i1, i2, i3 in combinations(range(n), 3):
        for i4 in range(n):
            for t in monomials:
                report.checked += 1
                lhs = rho_vec(bracket_basis(B, i1, i2, i3), i4, t)
                rhs = rho(i1, i2, rho(i3, i4, t)) + rho(i2, i3, rho(i1, i4, t)) + rho(i3, i1, rho(i2, i4, t))
                if lhs != rhs:
                    report.add_violation(
                        "rho([x1,x2,x3],x4) = rho(x1,x2)rho(x3,x4) + rho(x2,x3)rho(x1,x4) + rho(x3,x1)rho(x2,x4)",
                        labels_of(B, (i1, i2, i3, i4)),
                        format_tensor(lhs, B.labels),
                        format_tensor(rhs, B.labels),
                    )
    return report


def verify_structure_pattern(double: DoubleSpace, delta: Coproduct) -> CheckReport:
    """Δ(x_i*) lies in A*⊗A*⊗A*; every monomial of Δ(x_i) has exactly one factor from A."""
    if delta.dim != double.dim:
        raise ShapeError(f"coproduct dim {delta.dim} does not match double space dim {double.dim}")
    report = CheckReport("structure-pattern")
    for k in range(double.dim):
        starred = double.is_starred(k)
        for index, coeff in delta.image(k).items():
            report.checked += 1
            unstarred = sum(not double.is_starred(i) for i in index)
            if unstarred != (0 if starred else 1):
                report.add_violation(
                    "Δ(A*) ⊂ A*⊗A*⊗A*, Δ(A) has one factor in A",
                    (double.label(k),),
                    "⊗".join(double.label(i) for i in index),
                    "one unstarred factor" if not starred else "all factors starred",
                )
    return report
