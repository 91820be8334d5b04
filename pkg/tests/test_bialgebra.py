"""Tests for the double space, r-matrices and local cocycle 3-Lie bialgebras."""

from dataclasses import replace

import pytest

from bialgebra import (
    Coproduct,
    DoubleSpace,
    act_in_slot,
    coadjoint,
    coproduct_from_r,
    coproduct_via_products,
    coproduct_via_split,
    cybe_bracket,
    dual_bracket,
    is_skew,
    r_from_D,
    semidirect,
    verify_cocycle,
    verify_cybe,
    verify_local_cocycle_bialgebra,
    verify_slot_representation,
    verify_structure_pattern,
)
from lie3 import DomainError, LinearMap, ShapeError, Tensor, verify_filippov, verify_representation
from lie3.scalars import basis_vector
from lie3.tensor import wedge_coefficients


def swap23() -> LinearMap:
    e = [basis_vector(4, i) for i in range(4)]
    return LinearMap.from_columns([e[0], e[2], e[1], e[3]])


@pytest.fixture
def b1_r(b1, b1_witness) -> Tensor:
    return r_from_D(b1, b1_witness)


@pytest.fixture
def b1_delta(b1_double, b1_r) -> Coproduct:
    return coproduct_from_r(b1_double, b1_r)


class TestDoubleSpace:
    """Tests for A ∔ A* and the coadjoint representation."""

    def test_labels_and_indices(self, b1):
        """x_i* sits at index n + i."""
        double = DoubleSpace(b1)
        assert double.dim == 8
        assert double.label(4) == "x1*"
        assert double.index_of(1, starred=True) == 5
        assert double.is_starred(7) and not double.is_starred(3)

    def test_pairing(self, b1):
        """<x_i*, x_j> = δ_ij and A pairs trivially with itself."""
        double = DoubleSpace(b1)
        assert double.pairing(0, 4) == 1
        assert double.pairing(4, 0) == 1
        assert double.pairing(0, 5) == 0
        assert double.pairing(0, 1) == 0

    def test_label_out_of_range(self, b1):
        """Index 2n is outside the double space."""
        with pytest.raises(ShapeError):
            DoubleSpace(b1).label(8)

    def test_coadjoint_is_representation(self, b1, e1):
        """ad* satisfies both representation axioms."""
        assert verify_representation(b1, coadjoint(b1)).passed
        assert verify_representation(e1, coadjoint(e1)).passed

    def test_semidirect_bracket(self, b1_double):
        """[x2,x3,x1*] = -x4* in b1 ⋉ b1*."""
        expected = (0,) * 7 + (-1,)
        assert b1_double.brackets[(1, 2, 4)] == expected
        assert verify_filippov(b1_double).passed
        assert b1_double.labels[4:] == ("x1*", "x2*", "x3*", "x4*")


class TestCybe:
    """Tests for r = Σ ε_i (x_i*⊗x_i - x_i⊗x_i*) and [[r,r,r]]."""

    def test_r_from_diagonal_witness(self, b1_r):
        """The last sign flips the x4 terms."""
        assert b1_r[(4, 0)] == 1
        assert b1_r[(0, 4)] == -1
        assert b1_r[(7, 3)] == -1
        assert b1_r[(3, 7)] == 1
        assert len(b1_r) == 8
        assert is_skew(b1_r)

    def test_r_solves_cybe(self, b1_double, b1_r):
        """[[r,r,r]] = 0."""
        assert cybe_bracket(b1_double, b1_r).is_zero()
        assert verify_cybe(b1_double, b1_r).passed

    def test_r_from_non_diagonal_witness(self, b1):
        """The swap witness gives a skew solution too."""
        r = r_from_D(b1, swap23())
        assert is_skew(r)
        assert verify_cybe(semidirect(b1), r).passed

    def test_non_skew_r_fails(self, b1_double):
        """x2⊗x2* + x3⊗x3* + x4⊗x4* leaves one nonzero coordinate."""
        r = Tensor.from_terms(2, 8, [((1, 5), 1), ((2, 6), 1), ((3, 7), 1)])
        assert not is_skew(r)
        value = cybe_bracket(b1_double, r)
        assert value.items() == [((0, 5, 6, 7), 1)]
        report = verify_cybe(b1_double, r)
        assert report.violations[0].witness == ("x1", "x2*", "x3*", "x4*")

    def test_r_needs_involutive(self, b1):
        """The identity map does not give an r-matrix."""
        with pytest.raises(DomainError):
            r_from_D(b1, LinearMap.identity(4))

    def test_shape_mismatch(self, b1):
        """r over dim 4 does not act on the 4-dim algebra's double."""
        with pytest.raises(ShapeError):
            cybe_bracket(semidirect(b1), Tensor.zero(2, 4))


class TestCoproduct:
    """Tests for Δ = Δ1 + Δ2 + Δ3."""

    def test_known_images(self, b1_delta):
        """Δ(x1*) = -x2*∧x3*∧x4* and Δ(x2) = x1∧x3*∧x4*."""
        assert wedge_coefficients(b1_delta.image(4)) == {(5, 6, 7): -1}
        assert wedge_coefficients(b1_delta.image(1)) == {(0, 6, 7): 1}

    def test_parts_sum_to_total(self, b1_delta):
        """The three parts add up to Δ."""
        p1, p2, p3 = b1_delta.parts
        assert p1 + p2 + p3 == b1_delta

    def test_split_route_agrees(self, b1, b1_witness, b1_delta):
        """The block expansion gives the same Δ as the r-matrix route."""
        assert coproduct_via_split(b1, b1_witness) == b1_delta

    def test_split_route_needs_diagonal(self, b1):
        """A non-diagonal witness is refused by the block expansion."""
        with pytest.raises(DomainError):
            coproduct_via_split(b1, swap23())

    def test_product_route_agrees(self, b1, b1_witness, b1_delta):
        """Δ1, Δ2, Δ3 built from {}_D and {}_A match the r-matrix route part by part."""
        built = coproduct_via_products(b1, b1_witness)
        assert built == b1_delta
        assert built.parts == b1_delta.parts

    def test_product_route_non_diagonal(self, b1):
        """The swap witness needs no eigenbasis on the product route."""
        D = swap23()
        expected = coproduct_from_r(semidirect(b1), r_from_D(b1, D))
        built = coproduct_via_products(b1, D)
        assert built == expected
        assert built.parts == expected.parts

    def test_product_route_known_parts(self, b1, b1_witness):
        """Δ1(x1*) = -Σ {x_i,x_j,x_l}_D x_l*⊗x_j*⊗x_i* over the orderings of x2, x3, x4."""
        delta1 = coproduct_via_products(b1, b1_witness).parts[0]
        assert delta1.image(4).items() == [
            ((5, 6, 7), -1),
            ((5, 7, 6), 1),
            ((6, 5, 7), 1),
            ((6, 7, 5), -1),
            ((7, 5, 6), 1),
            ((7, 6, 5), -1),
        ]

    def test_product_route_needs_involutive(self, b1):
        """A non-involutive map is refused."""
        with pytest.raises(DomainError):
            coproduct_via_products(b1, LinearMap.identity(4))

    def test_non_skew_r_refused(self, b1_double):
        """coproduct_from_r needs a skew r."""
        r = Tensor.from_terms(2, 8, [((1, 5), 1)])
        with pytest.raises(DomainError):
            coproduct_from_r(b1_double, r)

    def test_apply_is_linear(self, b1_delta):
        """Δ(x2 + x1*) = Δ(x2) + Δ(x1*)."""
        v = tuple(a + b for a, b in zip(basis_vector(8, 1), basis_vector(8, 4)))
        assert b1_delta.apply(v) == b1_delta.image(1) + b1_delta.image(4)

    def test_out_of_range_image(self):
        """An image index past the dimension is a shape error."""
        with pytest.raises(ShapeError):
            Coproduct(2, {2: Tensor.monomial(2, (0, 0, 0))})

    def test_act_in_slot(self, b1_double):
        """ad(x2,x3) on the first slot of x4⊗x1⊗x1 gives x1⊗x1⊗x1."""
        t = Tensor.monomial(8, (3, 0, 0))
        assert act_in_slot(b1_double, 1, 2, t, 1) == Tensor.monomial(8, (0, 0, 0))
        assert act_in_slot(b1_double, 1, 2, t, 2).is_zero()


class TestLocalCocycleBialgebra:
    """Tests for the local cocycle 3-Lie bialgebra check."""

    def test_b1_witness_passes(self, b1_double, b1_delta):
        """Every sub-check passes for the diagonal witness."""
        report = verify_local_cocycle_bialgebra(b1_double, b1_delta)
        assert report.passed
        assert [c.name for c in report.children] == [
            "filippov",
            "cocycle-1",
            "cocycle-2",
            "cocycle-3",
            "alternating",
            "dual-filippov",
        ]

    def test_e1_witnesses_pass(self, e1):
        """Each diagonal witness of e1 yields a bialgebra."""
        from derivations import search_involutive_diagonal

        B = semidirect(e1)
        for D in search_involutive_diagonal(e1):
            delta = coproduct_from_r(B, r_from_D(e1, D))
            assert verify_local_cocycle_bialgebra(B, delta).passed

    def test_tampered_part_breaks_one_cocycle(self, b1_double, b1_delta):
        """x1⊗x1⊗x1 added to Δ1(x1) fails only the first cocycle."""
        p1, p2, p3 = b1_delta.parts
        bad = p1 + Coproduct(8, {0: Tensor.monomial(8, (0, 0, 0))})
        tampered = replace(b1_delta, parts=(bad, p2, p3))
        report = verify_local_cocycle_bialgebra(b1_double, tampered)
        assert report.failed_checks() == ["cocycle-1"]

    def test_tampered_image_breaks_alternation(self, b1_double, b1_delta):
        """A non-alternating image fails alternation and leaves the dual undefined."""
        images = dict(b1_delta.images)
        images[0] = b1_delta.image(0) + Tensor.monomial(8, (0, 0, 0))
        tampered = replace(b1_delta, images=images)
        report = verify_local_cocycle_bialgebra(b1_double, tampered)
        assert report.failed_checks() == ["alternating", "dual-filippov"]

    def test_missing_parts(self, b1_double, b1_delta):
        """Without Δ1, Δ2, Δ3 the cocycle check fails."""
        bare = Coproduct(8, b1_delta.images, b1_delta.labels)
        report = verify_local_cocycle_bialgebra(b1_double, bare)
        assert report.failed_checks() == ["cocycle"]

    def test_cocycle_slot_range(self, b1_double, b1_delta):
        """Slots run from 1 to 3."""
        with pytest.raises(ShapeError):
            verify_cocycle(b1_double, b1_delta.parts[0], 4)

    def test_dual_bracket(self, b1_delta):
        """The dual bracket reads Δ off the increasing triples."""
        dual = dual_bracket(b1_delta)
        assert dual.brackets[(5, 6, 7)][4] == -1
        assert verify_filippov(dual).passed

    def test_dual_bracket_needs_alternating(self):
        """A lone monomial image has no dual bracket."""
        delta = Coproduct(3, {0: Tensor.monomial(3, (0, 1, 2))})
        with pytest.raises(DomainError):
            dual_bracket(delta)


class TestStructurePattern:
    """Tests for the shape of Δ on A and A*."""

    def test_pattern_holds(self, b1, b1_delta):
        """Δ(A*) is all starred and Δ(A) has one unstarred factor."""
        assert verify_structure_pattern(DoubleSpace(b1), b1_delta).passed

    def test_pattern_violation(self, b1, b1_delta):
        """An unstarred factor in Δ(x1*) is reported."""
        images = dict(b1_delta.images)
        images[4] = b1_delta.image(4) + Tensor.monomial(8, (0, 5, 6))
        report = verify_structure_pattern(DoubleSpace(b1), replace(b1_delta, images=images))
        assert not report.passed
        assert report.violations[0].witness == ("x1*",)


class TestSlotRepresentation:
    """Tests for ad acting in one tensor slot."""

    @pytest.mark.parametrize("slot", [1, 2, 3])
    def test_each_slot_is_representation(self, b1_double, slot):
        """ad in any single slot is a representation of B."""
        assert verify_slot_representation(b1_double, slot).passed

    def test_bad_slot(self, b1_double):
        """Slot 0 does not exist."""
        with pytest.raises(ShapeError):
            verify_slot_representation(b1_double, 0)
