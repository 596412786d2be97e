"""Tests for exact scalars."""

from fractions import Fraction

import pytest
import sympy

from dirac_landau_verify.components.scalar import (
    HALF,
    INV_SQRT2,
    ONE,
    SQRT2,
    ZERO,
    I,
    Scalar,
)


class TestScalarArithmetic:
    """Test field operations in Q(i)(√2)."""

    def test_i_squared(self):
        """Test that i² = −1."""
        assert I * I == Scalar(-1)

    def test_sqrt2_squared(self):
        """Test that √2 · √2 = 2 and (1/√2)² = 1/2."""
        assert SQRT2 * SQRT2 == 2
        assert INV_SQRT2 * INV_SQRT2 == HALF

    def test_inverse(self):
        """Test that x · x⁻¹ = 1 for a mixed element."""
        x = Scalar(1, 2, Fraction(1, 3), -1)
        assert x * x.inverse() == ONE

    def test_division_by_zero(self):
        """Test that inverting zero raises."""
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()

    def test_mixed_with_int_and_fraction(self):
        """Test that ints and Fractions coerce."""
        assert Scalar(1) + 1 == 2
        assert 3 * HALF == Fraction(3, 2)
        assert 1 - HALF == HALF

    def test_reduced_fractions(self):
        """Test that parts stay in lowest terms."""
        x = Scalar(Fraction(2, 4))
        assert x.a_re.numerator == 1 and x.a_re.denominator == 2

    def test_power(self):
        """Test integer powers including negative ones."""
        assert (I**4) == ONE
        assert (SQRT2**-2) == HALF

    def test_bool_rejected(self):
        """Test that booleans are not coerced."""
        with pytest.raises(TypeError):
            Scalar.coerce(True)


class TestScalarConversions:
    """Test conversions and encodings."""

    def test_conjugate(self):
        """Test conjugation flips imaginary parts only."""
        x = Scalar(1, 2, 3, 4)
        assert x.conjugate() == Scalar(1, -2, 3, -4)

    def test_to_complex(self):
        """Test numeric value of 1/√2 + i."""
        value = (INV_SQRT2 + I).to_complex()
        assert value.real == pytest.approx(2**-0.5)
        assert value.imag == pytest.approx(1.0)

    def test_json_forms(self):
        """Test the [re, im] and [re, im, re√2, im√2] encodings."""
        assert Scalar(Fraction(1, 2), -1).to_json() == ["1/2", "-1/1"]
        assert INV_SQRT2.to_json() == ["0/1", "0/1", "1/2", "0/1"]
        assert Scalar.parse(["1/2", "-1/1"]) == Scalar(Fraction(1, 2), -1)
        assert Scalar.parse(["0", "0", "1/2", "0"]) == INV_SQRT2

    def test_parse_rejects_bad_length(self):
        """Test that three-part encodings are rejected."""
        with pytest.raises(ValueError):
            Scalar.parse(["1", "2", "3"])

    def test_sympy_roundtrip(self):
        """Test conversion through sympy for an element with a √2 part."""
        x = Scalar(Fraction(1, 3), 2, -1, Fraction(1, 2))
        assert Scalar.from_sympy(x.to_sympy()) == x

    def test_from_sympy_rejects_sqrt3(self):
        """Test that elements outside the field are rejected."""
        with pytest.raises(ValueError):
            Scalar.from_sympy(sympy.sqrt(3))

    def test_hashable(self):
        """Test that equal scalars hash equally."""
        assert hash(Scalar(1, 0)) == hash(ONE)
        assert len({Scalar(1), ONE, Scalar(Fraction(2, 2))}) == 1
