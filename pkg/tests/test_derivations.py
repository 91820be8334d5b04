"""Tests for derivations, involutive derivations and eigenspace splits."""

import pytest

from derivations import (
    derivation_space,
    diagonal_sign_patterns,
    eigensplit,
    is_derivation_in_span,
    search_involutive_diagonal,
    verify_dd_identity,
    verify_derivation,
    verify_involutive,
)
from catalog import CATALOG, catalog_algebra
from lie3 import AlgebraSpec, CapacityError, DomainError, LinearMap, ShapeError, ad, rank
from lie3.algebra import basis
from lie3.scalars import basis_vector


def swap23() -> LinearMap:
    """x2 <-> x3, fixing x1 and x4: involutive on b1 but not diagonal."""
    e = [basis_vector(4, i) for i in range(4)]
    return LinearMap.from_columns([e[0], e[2], e[1], e[3]])


class TestDerivation:
    """Tests for the derivation law."""

    def test_witness_is_derivation(self, b1, b1_witness):
        """diag(1,1,1,-1) satisfies the derivation law on b1."""
        assert verify_derivation(b1, b1_witness).passed

    def test_identity_is_not_derivation(self, b1):
        """I[x2,x3,x4] = x1 but the three-term sum gives 3 x1."""
        report = verify_derivation(b1, LinearMap.identity(4))
        assert not report.passed
        assert report.violations[0].witness == ("x2", "x3", "x4")

    def test_shape_mismatch(self, b1):
        """A 3x3 map on a 4-dim algebra is a shape error."""
        with pytest.raises(ShapeError):
            verify_derivation(b1, LinearMap.identity(3))

    def test_derivation_space_dimension(self, b1):
        """Der(b1) has dimension 12: Dx1 is fixed by the trace of D on x2, x3, x4."""
        space = derivation_space(b1)
        assert len(space) == 12
        for D in space:
            assert verify_derivation(b1, D).passed

    def test_derivation_space_of_abelian(self):
        """Every endomorphism of an abelian algebra is a derivation."""
        assert len(derivation_space(AlgebraSpec.abelian(3))) == 9

    def test_membership(self, b1, b1_witness):
        """Membership in Der(A) agrees with the derivation law."""
        assert is_derivation_in_span(b1, b1_witness)
        assert not is_derivation_in_span(b1, LinearMap.identity(4))


@pytest.mark.parametrize("case_id", list(CATALOG))
class TestDerivationAlgebra:
    """Der(A) is a Lie algebra holding every inner derivation."""

    def test_closed_under_commutator(self, case_id):
        """[D1, D2] = D1D2 - D2D1 stays in Der(A)."""
        alg = catalog_algebra(case_id)
        space = derivation_space(alg)
        flat = [D.flatten() for D in space]
        commutators = [(D1 @ D2 - D2 @ D1).flatten() for i, D1 in enumerate(space) for D2 in space[i + 1 :]]
        assert rank(flat + commutators, alg.dim * alg.dim) == len(space)

    def test_inner_derivations_belong(self, case_id):
        """ad(x_i, x_j) lies in Der(A) for every i < j."""
        alg = catalog_algebra(case_id)
        space = derivation_space(alg)
        e = basis(alg.dim)
        for i in range(alg.dim):
            for j in range(i + 1, alg.dim):
                assert is_derivation_in_span(alg, ad(alg, e[i], e[j]), space), (case_id, i + 1, j + 1)


class TestInvolutive:
    """Tests for involutive derivations."""

    def test_witness_is_involutive(self, b1, b1_witness):
        """diag(1,1,1,-1) squares to I."""
        assert verify_involutive(b1, b1_witness).passed

    def test_derivation_that_is_not_involutive(self, b1):
        """diag(3,1,1,1) is a derivation but D^2 != I."""
        report = verify_involutive(b1, LinearMap.diagonal([3, 1, 1, 1]))
        assert report.failed_checks() == ["square"]

    def test_non_diagonal_involution(self, b1):
        """Swapping x2 and x3 is an involutive derivation of b1."""
        assert verify_involutive(b1, swap23()).passed


class TestEigensplit:
    """Tests for A = A_1 ∔ A_-1."""

    def test_diagonal_split(self, b1, b1_witness):
        """x1, x2, x3 span A_1 and x4 spans A_-1."""
        split = eigensplit(b1, b1_witness)
        assert split.plus.rank == 3
        assert split.minus.basis == (basis_vector(4, 3),)
        assert split.part_of(basis_vector(4, 0)) == 1
        assert split.part_of(basis_vector(4, 3)) == -1
        assert split.part_of((1, 0, 0, 1)) is None

    def test_non_diagonal_split(self, b1):
        """x2 - x3 spans A_-1 for the swap."""
        split = eigensplit(b1, swap23())
        assert split.minus.basis == ((0, 1, -1, 0),)
        assert [sign for _, sign in split.eigenbasis()] == [1, 1, 1, -1]

    def test_requires_involutive(self, b1):
        """The identity is rejected."""
        with pytest.raises(DomainError):
            eigensplit(b1, LinearMap.identity(4))


class TestDiagonalSearch:
    """Tests for the ±1 diagonal search."""

    def test_b1_has_six_witnesses_in_order(self, b1):
        """ε1 = ε2 + ε3 + ε4 has six solutions, + before -."""
        assert diagonal_sign_patterns(b1) == [
            (1, 1, 1, -1),
            (1, 1, -1, 1),
            (1, -1, 1, 1),
            (-1, 1, -1, -1),
            (-1, -1, 1, -1),
            (-1, -1, -1, 1),
        ]

    def test_e1_witnesses(self, e1):
        """ε1 = -ε2 and ε3 = -ε4 leave four witnesses."""
        patterns = diagonal_sign_patterns(e1)
        assert len(patterns) == 4
        for D in search_involutive_diagonal(e1):
            assert verify_involutive(e1, D).passed

    def test_abelian_admits_everything(self):
        """All 2^n patterns work on an abelian algebra."""
        assert len(diagonal_sign_patterns(AlgebraSpec.abelian(3))) == 8

    def test_capacity_bound(self, b1):
        """Dimensions above the bound are refused."""
        with pytest.raises(CapacityError):
            diagonal_sign_patterns(b1, max_dim=3)


class TestDDIdentity:
    """Tests for [Dx,Dy,Dz] = D([Dx,Dy,z] + [Dy,Dz,x] + [Dz,Dx,y])."""

    def test_holds_for_every_witness(self, e1):
        """Every diagonal witness of e1 satisfies the identity."""
        for D in search_involutive_diagonal(e1):
            assert verify_dd_identity(e1, D).passed

    def test_holds_for_non_diagonal_witness(self, b1):
        """The swap satisfies it too."""
        assert verify_dd_identity(b1, swap23()).passed

    def test_fails_for_identity(self, b1):
        """I gives x1 on the left and 3 x1 on the right."""
        assert not verify_dd_identity(b1, LinearMap.identity(4)).passed
