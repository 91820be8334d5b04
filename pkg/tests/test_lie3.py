"""Tests for algebras, exact linear algebra and representations."""

from fractions import Fraction

import pytest

from catalog import catalog_algebra
from lie3 import (
    AlgebraSpec,
    LinearMap,
    Representation,
    ShapeError,
    adjoint_representation,
    center,
    derived_algebra,
    in_span,
    kernel,
    nullspace,
    rank,
    rref,
    semidirect_with,
    verify_antisymmetry,
    verify_filippov,
    verify_o_operator,
    verify_representation,
    zero_representation,
)
from lie3.algebra import bracket, bracket_basis, is_closed
from lie3.linalg import contains
from lie3.scalars import basis_vector


def x(i: int, n: int = 4):
    """Basis vector x_i, 1-based."""
    return basis_vector(n, i - 1)


class TestAlgebraSpec:
    """Tests for structure-constant storage."""

    def test_rejects_unordered_triple(self):
        """Stored triples must be strictly increasing."""
        with pytest.raises(ShapeError):
            AlgebraSpec(4, {(2, 1, 3): x(1)})

    def test_rejects_out_of_range(self):
        """Indices must lie in the basis."""
        with pytest.raises(ShapeError):
            AlgebraSpec(3, {(0, 1, 3): (1, 0, 0)})

    def test_from_relations_applies_sign(self):
        """[x3,x2,x4] = x1 stores [x2,x3,x4] = -x1."""
        alg = AlgebraSpec.from_relations(4, [((2, 1, 3), x(1))])
        assert alg.brackets == {(1, 2, 3): (-1, 0, 0, 0)}

    def test_from_relations_adds_repeats(self):
        """Repeated triples add up and cancel."""
        alg = AlgebraSpec.from_relations(4, [((1, 2, 3), x(1)), ((2, 1, 3), x(1))])
        assert alg.is_abelian()

    def test_equality_ignores_name_and_labels(self):
        """Two specs with the same constants compare equal."""
        a = AlgebraSpec(4, {(1, 2, 3): x(1)}, name="a", labels=("a", "b", "c", "d"))
        assert a == AlgebraSpec(4, {(1, 2, 3): x(1)})

    def test_describe(self, b1):
        """describe lists one relation per stored triple."""
        assert b1.describe() == ["[x2,x3,x4] = x1"]


class TestBracket:
    """Tests for bracket evaluation."""

    def test_signed_orderings(self, b1):
        """Odd permutations negate the bracket."""
        assert bracket_basis(b1, 1, 2, 3) == x(1)
        assert bracket_basis(b1, 2, 1, 3) == tuple(-a for a in x(1))
        assert bracket_basis(b1, 3, 1, 2) == x(1)

    def test_repeated_argument_vanishes(self, b1):
        """[x,x,y] = 0."""
        assert bracket_basis(b1, 1, 1, 3) == (0, 0, 0, 0)

    def test_trilinear(self, b1):
        """[x2 + x1, 2 x3, x4] = 2 x1."""
        u = tuple(a + b for a, b in zip(x(2), x(1)))
        v = tuple(2 * a for a in x(3))
        assert bracket(b1, u, v, x(4)) == (2, 0, 0, 0)


class TestFilippov:
    """Tests for the fundamental identity."""

    def test_b1_passes(self, b1):
        """[x2,x3,x4] = x1 is a 3-Lie algebra."""
        report = verify_filippov(b1)
        assert report.passed
        assert report.checked == 6 * 4

    def test_e1_passes(self, e1):
        """The four-bracket algebra is a 3-Lie algebra."""
        assert verify_filippov(e1).passed

    def test_tampered_constants_fail_with_witness(self):
        """Three brackets with [x1,x2,x3] = x3 violate the identity."""
        alg = AlgebraSpec.from_relations(4, [((1, 2, 3), x(1)), ((0, 2, 3), x(2)), ((0, 1, 2), x(3))])
        report = verify_filippov(alg)
        assert not report.passed
        violation = report.violations[0]
        assert violation.witness == ("x1", "x2", "x1", "x3", "x4")
        assert (violation.lhs, violation.rhs) == ("0", "x2")

    def test_counts_idle_tuples(self):
        """Tuples away from every bracket still count: C(5,2) * C(5,3) for 5-b1."""
        report = verify_filippov(catalog_algebra("5-b1"))
        assert report.passed
        assert report.checked == 100

    def test_antisymmetry(self, e1):
        """Every signed reordering agrees with the stored bracket."""
        report = verify_antisymmetry(e1)
        assert report.passed
        assert report.checked == 4 * 6 + 16


class TestInvariants:
    """Tests for the derived algebra and the center."""

    def test_b1_derived_and_center(self, b1):
        """A1 = Z(A) = span{x1} for b1."""
        assert derived_algebra(b1).basis == (x(1),)
        assert center(b1).basis == (x(1),)

    def test_e1_derived_is_whole(self, e1):
        """The four brackets span A."""
        assert derived_algebra(e1).is_whole()
        assert center(e1).is_zero()

    def test_derived_algebra_is_ideal(self, e1, b1):
        """[A1, A, A] lies in A1."""
        assert is_closed(b1, derived_algebra(b1))
        assert is_closed(e1, derived_algebra(e1))

    def test_abelian_center_is_whole(self):
        """Everything is central in an abelian algebra."""
        assert center(AlgebraSpec.abelian(3)).is_whole()

    def test_central_extension_center(self):
        """Z(5-b1) holds x1 and the idle x5."""
        z = center(catalog_algebra("5-b1"))
        assert z.rank == 2
        assert contains(z, x(1, 5))
        assert contains(z, x(5, 5))

    def test_derived_algebra_of_two_brackets(self):
        """A1 of 4-c3 is span{x1, x2}."""
        assert derived_algebra(catalog_algebra("4-c3")).basis == (x(1), x(2))


class TestLinalg:
    """Tests for exact row reduction."""

    def test_rref_and_pivots(self):
        """Dependent rows reduce to one."""
        rows, pivots = rref([(1, 2), (2, 4)], 2)
        assert rows == [(1, 2)]
        assert pivots == (0,)

    def test_rref_of_nothing(self):
        """No rows reduce to nothing."""
        assert rref([], 3) == ([], ())

    def test_rank_is_exact(self):
        """1/3 arithmetic stays exact."""
        third = Fraction(1, 3)
        assert rank([(third, 1), (1, 3)], 2) == 1

    def test_nullspace_annihilates(self):
        """Every nullspace vector is killed by every row."""
        rows = [(1, 1, 0, 0), (0, 0, 1, -1)]
        null = nullspace(rows, 4)
        assert len(null) == 2
        for v in null:
            for r in rows:
                assert sum(a * b for a, b in zip(r, v)) == 0

    def test_kernel_and_span_membership(self):
        """kernel returns a Subspace; in_span tests membership exactly."""
        k = kernel([(1, -1, 0)], 3)
        assert k.rank == 2
        assert in_span(k.basis, (1, 1, 5), 3)
        assert not in_span(k.basis, (1, 0, 0), 3)


class TestRepresentation:
    """Tests for representations and ℘-operators."""

    def test_adjoint_and_zero_pass(self, e1):
        """ad and the zero representation satisfy both axioms."""
        assert verify_representation(e1, adjoint_representation(e1)).passed
        assert verify_representation(e1, zero_representation(e1, 2)).passed

    def test_broken_representation_fails(self, b1):
        """rho(x1,x2) = I alone is not a representation of b1."""
        rep = Representation(b1, 1, {(0, 1): LinearMap.identity(1)})
        assert not verify_representation(b1, rep).passed

    def test_extension_mirrors_representation(self, b1):
        """A representation passes iff its semidirect extension is 3-Lie."""
        good = adjoint_representation(b1)
        bad = Representation(b1, 1, {(0, 1): LinearMap.identity(1)})
        assert verify_filippov(semidirect_with(b1, good)).passed
        assert not verify_filippov(semidirect_with(b1, bad)).passed

    def test_representation_dim_mismatch(self, b1):
        """A representation of another algebra is a shape error."""
        with pytest.raises(ShapeError):
            verify_representation(b1, adjoint_representation(AlgebraSpec.abelian(3)))

    def test_involutive_derivation_is_o_operator(self, b1, b1_witness):
        """An involutive derivation is a ℘-operator for ad."""
        assert verify_o_operator(b1, adjoint_representation(b1), b1_witness).passed

    def test_o_operator_shape(self, b1):
        """T must map the module into A."""
        with pytest.raises(ShapeError):
            verify_o_operator(b1, adjoint_representation(b1), LinearMap.identity(3))

    def test_swap_is_not_o_operator(self, b1):
        """Swapping x1 and x2 breaks the identity on (v1,v3,v4) and (v2,v3,v4)."""
        swap = LinearMap(((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
        report = verify_o_operator(b1, adjoint_representation(b1), swap)
        assert report.failed_checks() == ["o-operator"]
        assert report.checked == 4
        found = [(v.witness, v.lhs, v.rhs) for v in report.violations]
        assert found == [
            (("v1", "v3", "v4"), "x1", "2 x2"),
            (("v2", "v3", "v4"), "0", "x2"),
        ]


class TestLinearMap:
    """Tests for composition and application."""

    def test_composition(self):
        """(ST)v = S(Tv) with exact fractions."""
        S = LinearMap(((1, Fraction(1, 2)), (0, 3)))
        T = LinearMap(((2, 0), (Fraction(-1, 3), 1)))
        assert (S @ T).rows == ((Fraction(11, 6), Fraction(1, 2)), (-1, 3))
        v = (Fraction(1, 5), 7)
        assert (S @ T).apply(v) == S.apply(T.apply(v))

    def test_composition_shape(self):
        """Inner dimensions must agree."""
        with pytest.raises(ShapeError):
            LinearMap.identity(2) @ LinearMap.identity(3)
