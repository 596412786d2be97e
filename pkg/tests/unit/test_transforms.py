"""Tests for the KS and LC phase-space transforms."""

from fractions import Fraction

import pytest

from dirac_landau_verify.components.check_record import CheckStatus
from dirac_landau_verify.components.errors import PhaseSpaceError
from dirac_landau_verify.components.transforms import (
    AS_PRINTED,
    CANONICAL,
    HOPF_NORMALIZED,
    PAPER_LITERAL,
    PhasePoint2,
    PhasePoint3,
    PhasePoint4,
    constrained_samples,
    hopf_norm_check,
    hopf_records,
    ks_canonical_check,
    ks_canonical_records,
    ks_constraint,
    ks_map,
    ks_restrict_to_lc,
    lc_bracket_check,
    lc_map,
    lc_records,
    lc_two_to_one,
    oscillator_plane,
    planar_samples,
    poisson_bracket,
    restriction_records,
    run_checks,
)


def _failed(records):
    return [r.id for r in records if r.status is CheckStatus.FAIL]


def _by_id(records):
    return {r.id: r for r in records}


class TestPhasePoints:
    """Test phase-space point validation."""

    def test_zero_section_rejected(self):
        """Test u = 0 raises PhaseSpaceError."""
        with pytest.raises(PhaseSpaceError):
            PhasePoint4((0, 0, 0, 0), (1, 0, 0, 0))

    def test_collision_rejected(self):
        """Test x = 0 raises PhaseSpaceError."""
        with pytest.raises(PhaseSpaceError):
            PhasePoint3((0, 0, 0), (1, 1, 1))

    def test_wrong_length(self):
        """Test component counts are checked."""
        with pytest.raises(PhaseSpaceError):
            PhasePoint4((1, 0, 0))

    def test_coordinates_are_fractions(self):
        """Test integer input is stored exactly."""
        pt = PhasePoint4((1, 2, 0, 0), (Fraction(1, 3), 0, 0, 0))
        assert pt.u == (Fraction(1), Fraction(2), Fraction(0), Fraction(0))
        assert pt.z_squared == 5
        assert pt.to_json()["w"][0] == "1/3"

    def test_scaled_flips_pairs(self):
        """Test per-index sign flips act on u and w together."""
        pt = PhasePoint4((1, 2, 3, 4), (5, 6, 7, 8)).scaled((1, -1, 1, -1))
        assert pt.u == (1, -2, 3, -4)
        assert pt.w == (5, -6, 7, -8)


class TestKSMap:
    """Test the Kustaanheimo-Stiefel map."""

    def test_literal_value(self):
        """Test u = (1, 0, 0, 0) maps to x = (0, 0, −1)."""
        image = ks_map(PhasePoint4((1, 0, 0, 0)), PAPER_LITERAL)
        assert image.x == (0, 0, -1)
        assert image.p == (0, 0, 0)

    def test_hopf_value(self):
        """Test u = (1, 1, 0, 0) maps to x = (0, 0, −2)."""
        assert ks_map(PhasePoint4((1, 1, 0, 0)), HOPF_NORMALIZED).x == (0, 0, -2)

    def test_hopf_doubles_first_rows(self):
        """Test the normalized x1 and x2 are twice the printed ones."""
        pt = PhasePoint4((1, 2, 3, -1), (0, 1, 0, 2))
        literal = ks_map(pt, PAPER_LITERAL)
        hopf = ks_map(pt, HOPF_NORMALIZED)
        assert hopf.x[:2] == tuple(2 * c for c in literal.x[:2])
        assert hopf.x[2] == literal.x[2]
        assert hopf.p == literal.p

    def test_unknown_mode(self):
        """Test unknown KS modes are rejected."""
        with pytest.raises(PhaseSpaceError):
            ks_map(PhasePoint4((1, 0, 0, 0)), "halved")

    def test_constraint(self):
        """Test K = u1w2 − u2w1 + u3w4 − u4w3."""
        assert ks_constraint(PhasePoint4((1, 0, 0, 0), (0, 1, 0, 0))) == 1
        assert ks_constraint(PhasePoint4((1, 0, 0, 0), (1, 0, 0, 0))) == 0

    def test_constrained_samples(self):
        """Test sampled points lie on K = 0 and are reproducible."""
        samples = constrained_samples(6, seed=3)
        assert all(ks_constraint(pt) == 0 for pt in samples)
        assert samples == constrained_samples(6, seed=3)


class TestHopfNorm:
    """Test |x| = |z|² in both KS modes."""

    def test_normalized_holds(self):
        """Test the Hopf-normalized map preserves the norm relation."""
        assert hopf_norm_check(4, seed=1, mode=HOPF_NORMALIZED).holds

    def test_literal_fails(self):
        """Test u = (1, 0, 1, 0) gives |x|² = 1 but |z|⁴ = 4 in literal mode."""
        image = ks_map(PhasePoint4((1, 0, 1, 0)), PAPER_LITERAL)
        assert image.x_squared == 1
        assert not hopf_norm_check(4, seed=1, mode=PAPER_LITERAL).holds

    def test_records(self):
        """Test the literal norm failure is recorded as expected."""
        records = _by_id(hopf_records(4, seed=1))
        assert records["transforms.hopf-norm.hopf-normalized"].status is (
            CheckStatus.PASS
        )
        literal = records["transforms.hopf-norm.paper-literal"]
        assert literal.status is CheckStatus.EXPECTED_FAIL
        assert "known_discrepancy" in literal.convention_notes


class TestKSCanonical:
    """Test Poisson brackets of the KS coordinates."""

    def test_hopf_constant(self):
        """Test {x_i, p_j} = −2 δ_ij with vanishing cross brackets."""
        report = ks_canonical_check(3, seed=2, mode=HOPF_NORMALIZED)
        assert report.constant == -2
        assert report.canonical_up_to_constant

    def test_literal_constants_depend_on_index(self):
        """Test the printed rows give −1, −1 and −2."""
        report = ks_canonical_check(3, seed=2, mode=PAPER_LITERAL)
        assert report.diagonal == {
            1: {Fraction(-1)},
            2: {Fraction(-1)},
            3: {Fraction(-2)},
        }
        assert report.constant is None
        assert not report.nonzero

    def test_rescaled_momenta(self):
        """Test dividing p by −2 yields canonical coordinates."""
        report = ks_canonical_check(
            3, seed=2, mode=HOPF_NORMALIZED, momentum_scale=Fraction(-1, 2)
        )
        assert report.constant == 1

    def test_records(self):
        """Test literal failures are expected and nothing else fails."""
        records = ks_canonical_records(3, seed=2, mode=HOPF_NORMALIZED)
        assert _failed(records) == []
        by_id = _by_id(records)
        assert by_id["transforms.ks-rescaled.hopf-normalized"].status is (
            CheckStatus.PASS
        )
        assert by_id["transforms.ks-canonical.paper-literal"].status is (
            CheckStatus.EXPECTED_FAIL
        )

    def test_literal_rescaling_impossible(self):
        """Test literal mode has no constant to rescale by."""
        records = _by_id(ks_canonical_records(2, seed=2, mode=PAPER_LITERAL))
        rescaled = records["transforms.ks-rescaled.paper-literal"]
        assert rescaled.status is CheckStatus.EXPECTED_FAIL

    def test_bracket_on_constraint_function(self):
        """Test {K, x1} = 0 off the constraint surface too."""
        pt = PhasePoint4((1, 2, -1, 3), (2, 0, 1, -1))
        assert ks_constraint(pt) != 0
        assert poisson_bracket("K", "x1", pt) == 0

    def test_unknown_function(self):
        """Test unknown coordinate names raise."""
        with pytest.raises(PhaseSpaceError):
            poisson_bracket("x9", "p1", PhasePoint4((1, 0, 0, 0)))


class TestLCMap:
    """Test the Levi-Civita map."""

    def test_square(self):
        """Test (1 + 2i)² = −3 + 4i."""
        image = lc_map(PhasePoint2((1, 2)))
        assert image.q == (-3, 4)

    def test_canonical_momenta_rescaled(self):
        """Test canonical momenta are the printed ones over 2 and −2."""
        pt = PhasePoint2((1, 2), (3, -1))
        printed = lc_map(pt, AS_PRINTED)
        canonical = lc_map(pt, CANONICAL)
        assert canonical.p == (printed.p[0] / 2, printed.p[1] / -2)

    def test_unknown_normalization(self):
        """Test unknown momentum normalizations raise."""
        with pytest.raises(PhaseSpaceError):
            lc_map(PhasePoint2((1, 0)), "halved")

    def test_oscillator_plane(self):
        """Test the plane keeps (u1, u3, w1, w3)."""
        plane = oscillator_plane(PhasePoint4((1, 2, 3, 4), (5, 6, 7, 8)))
        assert plane.q == (1, 3)
        assert plane.p == (5, 7)

    def test_planar_samples(self):
        """Test planar samples have u2 = u4 = w2 = w4 = 0 and u1u3 ≠ 0."""
        for pt in planar_samples(5, seed=4):
            assert pt.u[1] == pt.u[3] == pt.w[1] == pt.w[3] == 0
            assert pt.u[0] != 0 and pt.u[2] != 0

    def test_two_to_one(self):
        """Test the fiber is exactly {±(u, w)}."""
        report = lc_two_to_one(5, seed=4)
        assert report.is_two_to_one


class TestLCBrackets:
    """Test the LC bracket constants."""

    def test_printed_constants(self):
        """Test {ξ, p_ξ} = 2 and {η, p_η} = −2."""
        report = lc_bracket_check(3, seed=6, momenta=AS_PRINTED)
        assert report.constant("xi-p_xi") == 2
        assert report.constant("eta-p_eta") == -2
        assert report.values["xi-eta"] == {Fraction(0)}

    def test_canonical_constants(self):
        """Test both constants are 1 after rescaling."""
        report = lc_bracket_check(3, seed=6, momenta=CANONICAL)
        assert report.constant("xi-p_xi") == report.constant("eta-p_eta") == 1

    @pytest.mark.parametrize("momenta", [AS_PRINTED, CANONICAL])
    def test_records(self, momenta):
        """Test no LC record fails."""
        records = lc_records(3, seed=6, momenta=momenta)
        assert _failed(records) == []
        equal = _by_id(records)["transforms.lc-canonical.equal-constants"]
        if momenta == CANONICAL:
            assert equal.status is CheckStatus.PASS
        else:
            assert equal.status is CheckStatus.EXPECTED_FAIL


class TestRestriction:
    """Test KS restricted to the plane against LC."""

    def test_hopf_identification(self):
        """Test x1 = η, x3 = −ξ, p1 = p_η and p3 = p_ξ."""
        report = ks_restrict_to_lc(4, seed=8, mode=HOPF_NORMALIZED)
        assert report.consistent
        assert report.identification == {
            "x1": ("eta", Fraction(1)),
            "x3": ("xi", Fraction(-1)),
            "p1": ("p_eta", Fraction(1)),
            "p3": ("p_xi", Fraction(1)),
        }

    def test_literal_halves_x1(self):
        """Test the printed rows give x1 = η/2."""
        report = ks_restrict_to_lc(4, seed=8, mode=PAPER_LITERAL)
        assert report.identification["x1"] == ("eta", Fraction(1, 2))

    def test_records(self):
        """Test the printed x3 = ξ claim is an expected failure."""
        records = _by_id(restriction_records(4, seed=8, mode=HOPF_NORMALIZED))
        assert records["transforms.ks-restriction.hopf-normalized"].status is (
            CheckStatus.PASS
        )
        printed = records["transforms.ks-restriction.printed-x3-equals-xi"]
        assert printed.status is CheckStatus.EXPECTED_FAIL


class TestSuite:
    """Test the full transforms suite."""

    def test_run_checks(self, small_settings):
        """Test the suite audits both KS modes without failures."""
        records = run_checks(small_settings)
        assert _failed(records) == []
        ids = {r.id for r in records}
        assert "transforms.hopf-norm.paper-literal" in ids
        assert "transforms.ks-rescaled.hopf-normalized" in ids
