"""Tests for conformal generators built from the Jordan triple product."""

from fractions import Fraction

import pytest

from dirac_landau_verify.components.check_record import CheckStatus
from dirac_landau_verify.components.errors import PhaseSpaceError
from dirac_landau_verify.components.jordan import JordanField
from dirac_landau_verify.components.scalar import I, Scalar
from dirac_landau_verify.components.tkk import (
    EXPECTED_KILLING,
    TableOperators,
    ambient_representation,
    build_conformal,
    cone_point,
    field_for_dimension,
    grading_check,
    invert,
    inversion_check,
    inversion_records,
    reduction_records,
    restriction_record,
    table_records,
    verify_conformal_relations,
    verify_tkk_relations,
)


def _failed(records):
    return [r.id for r in records if r.status is CheckStatus.FAIL]


class TestConformalGenerators:
    """Test the differential-operator generators."""

    def test_dimension_to_field(self):
        """Test d = 4 is complex, d = 3 is real and others are rejected."""
        assert field_for_dimension(4) is JordanField.COMPLEX
        assert field_for_dimension(3) is JordanField.REAL
        with pytest.raises(ValueError):
            field_for_dimension(5)

    @pytest.mark.parametrize(
        "field,count", [(JordanField.COMPLEX, 15), (JordanField.REAL, 10)]
    )
    def test_generator_count(self, field, count):
        """Test so(2,4) has 15 generators and so(2,3) has 10."""
        assert len(build_conformal(field).generators) == count

    def test_translation(self):
        """Test P_ν = i∂_ν."""
        alg = build_conformal(JordanField.REAL)
        assert alg.P(1) == alg.signature.gen("d1").scale(I)

    def test_degree_is_grade_plus_one(self):
        """Test coefficient degree tracks the grade."""
        alg = build_conformal(JordanField.COMPLEX)
        for gen in alg.generators.values():
            assert gen.degree == gen.grade + 1

    @pytest.mark.parametrize("field", [JordanField.COMPLEX, JordanField.REAL])
    def test_grading(self, field):
        """Test [x·∂, g] = grade·g and grade additivity."""
        assert _failed(grading_check(field)) == []

    @pytest.mark.parametrize("dim", [3, 4])
    def test_conformal_relations(self, dim):
        """Test the P, M, D, K brackets."""
        assert _failed(verify_conformal_relations(dim)) == []


class TestTableOperators:
    """Test the triple-product table operators."""

    def test_u_lower_is_directional_derivative(self):
        """Test U_a = a^μ ∂_μ."""
        ops = TableOperators(JordanField.REAL)
        a = ops.basis(0).scale(2) + ops.basis(2)
        d0, d2 = ops.signature.gens("d0", "d2")
        assert ops.u_lower(a) == d0.scale(2) + d2

    @pytest.mark.parametrize("field", [JordanField.COMPLEX, JordanField.REAL])
    def test_table_matches_generators(self, field):
        """Test U, K and S against P, K, D and M."""
        records = {r.id: r for r in table_records(field)}
        tag = field.value
        assert records[f"tkk.{tag}.u-equals-minus-i-p"].status is CheckStatus.PASS
        assert records[f"tkk.{tag}.k-table"].status is CheckStatus.PASS
        assert (
            records[f"tkk.{tag}.s-equals-delta-d-minus-m"].status is CheckStatus.PASS
        )
        printed = records[f"tkk.printed.s-equals-m-minus-delta-d.{tag}"]
        assert printed.status is CheckStatus.EXPECTED_FAIL

    def test_relations_with_fitted_signs(self):
        """Test the abstract relations hold once the signs are fitted."""
        report = verify_tkk_relations(JordanField.REAL)
        assert report.passed
        assert report.signs in ((1, 1), (1, -1), (-1, 1), (-1, -1))


class TestRestrictionAndAmbient:
    """Test the real slice and the ambient so(2,d) matrices."""

    def test_real_slice(self):
        """Test σ2-free complex generators restrict to the real ones."""
        assert restriction_record().status is CheckStatus.PASS

    @pytest.mark.parametrize("dim", [3, 4])
    def test_ambient_closure(self, dim):
        """Test the fundamental matrices close."""
        assert ambient_representation(dim).closure.passed

    def test_builders_are_cached(self):
        """Test repeated builds return the same objects."""
        assert ambient_representation(3) is ambient_representation(3)
        assert build_conformal(JordanField.REAL) is build_conformal(JordanField.REAL)

    def test_cone_point_is_null(self):
        """Test the lifted point has zero ambient norm."""
        p = cone_point([Fraction(1), Fraction(2), Fraction(-1)], 3)
        eta = ambient_representation(3).eta
        assert (p.T * eta * p)[0] == 0

    def test_reduction(self):
        """Test both deletions reach so(2,3) with the same Killing signature."""
        records = reduction_records()
        assert _failed(records) == []
        notes = records[1].convention_notes
        assert tuple(notes["ambient_deletion"]) == EXPECTED_KILLING[3]


class TestInversion:
    """Test the conformal inversion."""

    def test_invert(self):
        """Test I(x) = (x⁰/x², −x/x²)."""
        assert invert((2, 1, 0, 0)) == (
            Fraction(2, 3),
            Fraction(-1, 3),
            Fraction(0),
            Fraction(0),
        )

    def test_involution(self):
        """Test I∘I is the identity off the cone."""
        point = (3, 1, -1, 2)
        assert invert(invert(point)) == tuple(Fraction(c) for c in point)

    def test_light_cone_rejected(self):
        """Test points with x² = 0 raise."""
        with pytest.raises(PhaseSpaceError):
            invert((1, 1, 0, 0))

    def test_k_is_conjugated_p(self):
        """Test K = c·I P I with c = ±1; the literal c = 1 is flagged."""
        records = {r.id: r for r in inversion_records(samples=4, seed=5)}
        assert records["tkk.inversion.involution"].status is CheckStatus.PASS
        assert records["tkk.inversion.k-equals-ipi"].status is CheckStatus.PASS
        assert records["tkk.printed.k-equals-ipi"].status is not CheckStatus.FAIL

    def test_inversion_ratio(self):
        """Test one constant ±1 relates K and I P I at every sample."""
        report = inversion_check(samples=3, seed=5)
        assert report.samples == 3
        assert report.involution_ok
        assert report.ratio in (Scalar(1), Scalar(-1))
        assert report.mismatches == []
