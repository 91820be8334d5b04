"""Tests for exact scalars and sparse tensors."""

from fractions import Fraction

import pytest

from lie3 import ShapeError, Tensor, alternating_part, format_tensor, format_wedge, permute_factors, wedge3
from lie3.scalars import basis_vector, format_vector, parse_scalar, to_scalar
from lie3.tensor import wedge_coefficients


LABELS = ("x1", "x2", "x3", "x4")


def e(i: int, n: int = 4):
    return basis_vector(n, i)


class TestScalars:
    """Tests for rational parsing and formatting."""

    def test_parse_integer_and_fraction(self):
        """p and p/q parse to exact fractions."""
        assert parse_scalar("-3") == Fraction(-3)
        assert parse_scalar("2/4") == Fraction(1, 2)

    @pytest.mark.parametrize("text", ["0.5", "1e3", "x", "1/0", ""])
    def test_parse_rejects_non_rationals(self, text):
        """Decimals, exponents and zero denominators are rejected."""
        with pytest.raises(ValueError):
            parse_scalar(text)

    def test_to_scalar_rejects_bool(self):
        """Booleans are not accepted as scalars."""
        with pytest.raises(ValueError):
            to_scalar(True)

    def test_format_vector(self):
        """Vectors render as signed sums of labels."""
        assert format_vector((Fraction(1), Fraction(-1, 2), 0, 0), LABELS) == "x1 - 1/2 x2"
        assert format_vector((Fraction(-1), 0, 0, 0), LABELS) == "-x1"
        assert format_vector((0, 0, 0, 0), LABELS) == "0"


class TestTensor:
    """Tests for the sparse tensor type."""

    def test_zeros_are_dropped(self):
        """Zero coefficients are never stored."""
        t = Tensor(2, 3, {(0, 1): 0, (1, 2): 5})
        assert len(t) == 1
        assert t[(0, 1)] == 0

    def test_from_terms_adds_repeats(self):
        """Repeated indices accumulate and cancel."""
        t = Tensor.from_terms(2, 2, [((0, 1), Fraction(1)), ((0, 1), Fraction(-1)), ((1, 1), Fraction(2))])
        assert t.items() == [((1, 1), Fraction(2))]

    def test_bad_index_raises(self):
        """An out-of-range index is a shape error."""
        with pytest.raises(ShapeError):
            Tensor(2, 2, {(0, 2): 1})

    def test_add_requires_same_shape(self):
        """Tensors of different rank do not add."""
        with pytest.raises(ShapeError):
            Tensor.zero(2, 3) + Tensor.zero(3, 3)

    def test_outer_product(self):
        """outer multiplies coordinates slot by slot."""
        t = Tensor.outer((1, 2), (0, 3))
        assert t.entries == {(0, 1): 3, (1, 1): 6}

    def test_permute_factors_swaps_slots(self):
        """φ_13 maps a⊗b⊗c to c⊗b⊗a."""
        t = Tensor.monomial(4, (0, 1, 2))
        assert permute_factors(t, 1, 3) == Tensor.monomial(4, (2, 1, 0))

    def test_permute_factors_rejects_equal_slots(self):
        """Swapping a slot with itself is a shape error."""
        with pytest.raises(ShapeError):
            permute_factors(Tensor.monomial(4, (0, 1, 2)), 2, 2)

    def test_format_tensor(self):
        """Monomials render in index order with the tensor sign."""
        t = Tensor.from_terms(2, 2, [((0, 1), Fraction(1)), ((1, 0), Fraction(-2))])
        assert format_tensor(t, ("x1", "x2")) == "x1⊗x2 - 2 x2⊗x1"
        assert format_tensor(Tensor.zero(2, 2), ("x1", "x2")) == "0"


class TestWedge:
    """Tests for alternating rank-3 tensors."""

    def test_wedge_has_six_signed_terms(self):
        """a∧b∧c is the unnormalized signed sum over S3."""
        w = wedge3(e(0), e(1), e(2))
        assert len(w) == 6
        assert w[(0, 1, 2)] == 1
        assert w[(1, 0, 2)] == -1
        assert w[(2, 0, 1)] == 1

    def test_wedge_with_repeated_factor_vanishes(self):
        """x1∧x3∧x1 is zero."""
        assert wedge3(e(0), e(2), e(0)).is_zero()

    def test_alternating_part(self):
        """A wedge is alternating; a single monomial is not."""
        w = wedge3(e(0), e(1), e(3))
        assert alternating_part(w) == (w, True)
        alt, ok = alternating_part(Tensor.monomial(4, (0, 1, 2)))
        assert not ok
        assert alt[(0, 1, 2)] == Fraction(1, 6)

    def test_wedge_coefficients(self):
        """Only increasing indices are kept."""
        w = wedge3(e(2), e(0), e(1)).scale(3) - wedge3(e(0), e(1), e(3))
        assert wedge_coefficients(w) == {(0, 1, 2): 3, (0, 1, 3): -1}

    def test_format_wedge(self):
        """Wedge normal form lists increasing factors once."""
        w = wedge3(e(1), e(0), e(2)) + wedge3(e(1), e(2), e(3)).scale(Fraction(1, 2))
        assert format_wedge(w, LABELS) == "-x1∧x2∧x3 + 1/2 x2∧x3∧x4"
        assert format_wedge(w, LABELS, "^") == "-x1^x2^x3 + 1/2 x2^x3^x4"
