"""Tests for the 2×2 Hermitian Jordan algebras."""

from fractions import Fraction

import pytest
import sympy

from dirac_landau_verify.components.check_record import CheckStatus
from dirac_landau_verify.components.errors import JordanFieldError
from dirac_landau_verify.components.jordan import (
    JordanElement,
    JordanField,
    closed_form_constants,
    embed_complex,
    jordan_product,
    matrix_product,
    metric_norm,
    minkowski_norm,
    project_real,
    structure_constants,
    triple_product,
    verify_jordan_identities,
)

C = JordanField.COMPLEX
R = JordanField.REAL


class TestJordanElement:
    """Test element construction and conversions."""

    def test_wrong_dimension(self):
        """Test the coordinate count must match the field."""
        with pytest.raises(JordanFieldError):
            JordanElement.of(R, 1, 2, 3, 4)

    def test_matrix_form(self):
        """Test x ↦ [[x0 + x3, x1 − i x2], [x1 + i x2, x0 − x3]]."""
        x = JordanElement.of(C, 1, 2, 3, 4)
        expected = sympy.Matrix([[5, 2 - 3 * sympy.I], [2 + 3 * sympy.I, -3]])
        assert x.matrix() == expected

    def test_from_matrix(self):
        """Test coordinates are read back from a Hermitian matrix."""
        x = JordanElement.of(C, Fraction(1, 2), -1, 2, 3)
        assert JordanElement.from_matrix(x.matrix(), C) == x

    def test_real_rejects_sigma2(self):
        """Test a σ2 part cannot be read as a real element."""
        sigma2 = JordanElement.basis(C, 2).matrix()
        with pytest.raises(JordanFieldError):
            JordanElement.from_matrix(sigma2, R)

    def test_non_hermitian_rejected(self):
        """Test non-Hermitian matrices are rejected."""
        with pytest.raises(JordanFieldError):
            JordanElement.from_matrix(sympy.Matrix([[sympy.I, 0], [0, 0]]), C)

    def test_mixing_fields(self):
        """Test real and complex elements do not combine."""
        with pytest.raises(JordanFieldError):
            jordan_product(JordanElement.basis(R, 0), JordanElement.basis(C, 0))


class TestProducts:
    """Test Jordan and triple products."""

    def test_pauli_squares(self):
        """Test σ_i∘σ_i = σ0 and σ1∘σ3 = 0."""
        for mu in range(4):
            e = JordanElement.basis(C, mu)
            assert jordan_product(e, e) == JordanElement.basis(C, 0)
        assert jordan_product(
            JordanElement.basis(C, 1), JordanElement.basis(C, 3)
        ).is_zero()

    def test_matches_matrix_product(self):
        """Test the coordinate product agrees with ½(ab + ba)."""
        a = JordanElement.of(C, 1, -2, 3, 0)
        b = JordanElement.of(C, 2, 1, -1, 4)
        assert jordan_product(a, b) == matrix_product(a, b)

    def test_triple_symmetry(self):
        """Test (abc) = (cba)."""
        a = JordanElement.of(R, 1, 2, -1)
        b = JordanElement.of(R, 0, 3, 1)
        c = JordanElement.of(R, -2, 1, 4)
        assert triple_product(a, b, c) == triple_product(c, b, a)

    def test_identity_triple(self):
        """Test (σ0 σ1 σ0) = σ1 and (σ1 σ0 σ1) = σ0."""
        e0, e1 = JordanElement.basis(C, 0), JordanElement.basis(C, 1)
        assert triple_product(e0, e1, e0) == e1
        assert triple_product(e1, e0, e1) == e0

    def test_norm_is_determinant(self):
        """Test det x = x0² − x1² − x2² − x3²."""
        x = JordanElement.of(C, 3, 1, 2, 1)
        assert minkowski_norm(x) == metric_norm(x) == 3


class TestStructureConstants:
    """Test the triple-product structure constants."""

    @pytest.mark.parametrize("field", [C, R])
    def test_closed_form_matches(self, field):
        """Test computed constants equal δδ + δδ − gg everywhere."""
        report = structure_constants(field)
        assert report.matches
        assert report.computed.is_outer_symmetric()

    def test_closed_form_entry(self):
        """Test Σ^{00}_{11} = −g^{00} g_{11} = 1 and Σ^{00}_{00} = 1."""
        table = closed_form_constants(C)
        assert table.entry(1, 0, 1, 0) == 1
        assert table.entry(0, 0, 0, 0) == 1

    def test_json(self):
        """Test constants serialize as nested string tables."""
        data = closed_form_constants(R).to_json()
        assert data["field"] == "real"
        assert data["table"][0][0][0] == ["1", "0", "0"]


class TestProjection:
    """Test the real projection and embedding."""

    def test_project_drops_sigma2(self):
        """Test (x0, x1, x2, x3) ↦ (x0, x1, x3)."""
        assert project_real(JordanElement.of(C, 1, 2, 3, 4)) == JordanElement.of(
            R, 1, 2, 4
        )

    def test_embed_then_project(self):
        """Test projection inverts the embedding."""
        y = JordanElement.of(R, 1, -1, 2)
        assert project_real(embed_complex(y)) == y

    def test_wrong_field(self):
        """Test projection and embedding check their input field."""
        with pytest.raises(JordanFieldError):
            project_real(JordanElement.basis(R, 0))
        with pytest.raises(JordanFieldError):
            embed_complex(JordanElement.basis(C, 0))


class TestIdentities:
    """Test sampled identities."""

    @pytest.mark.parametrize("field", [C, R])
    def test_all_pass(self, field):
        """Test commutativity, Jordan, symmetry and five-term identities."""
        records = verify_jordan_identities(field, trials=6, seed=3)
        assert len(records) == 4
        assert all(r.status is CheckStatus.PASS for r in records)

    def test_trials_must_be_positive(self):
        """Test zero trials are rejected."""
        with pytest.raises(ValueError):
            verify_jordan_identities(C, trials=0, seed=1)
