"""Tests for the Weyl engine and Fock property suite."""

import numpy as np

from dirac_landau_verify.components.algebra_checks import (
    fock_records,
    homomorphism_records,
    leibniz_records,
    property_records,
    radial_records,
    random_element,
    random_radial_element,
    run_checks,
)
from dirac_landau_verify.components.check_record import CheckStatus
from dirac_landau_verify.components.landau import OSCILLATOR


def _failed(records):
    return [r.id for r in records if r.status is CheckStatus.FAIL]


class TestSampling:
    """Test random element generation."""

    def test_reproducible(self):
        """Test one seed gives one element."""
        a = random_element(OSCILLATOR, np.random.default_rng(5))
        b = random_element(OSCILLATOR, np.random.default_rng(5))
        assert a == b

    def test_degree_bound(self):
        """Test sampled elements respect the degree bound."""
        rng = np.random.default_rng(9)
        for _ in range(5):
            element = random_element(OSCILLATOR, rng, max_degree=2)
            assert element.degree() <= 2

    def test_radial_element_has_at_most_one_derivative(self):
        """Test radial samples carry zero or one derivative."""
        rng = np.random.default_rng(2)
        element = random_radial_element(rng)
        assert all(sum(key[3]) <= 1 for key in element.terms)


class TestRecords:
    """Test each record family passes."""

    def test_leibniz(self):
        """Test the hand-checked commutators."""
        records = leibniz_records()
        assert len(records) == 4
        assert _failed(records) == []

    def test_properties(self):
        """Test Jacobi, associativity and friends on sampled triples."""
        records = property_records(trials=3, seed=1)
        assert _failed(records) == []
        assert records[0].convention_notes["instances"] == 3

    def test_homomorphism(self):
        """Test the holomorphic-to-phase substitution respects products."""
        assert _failed(homomorphism_records(trials=3, seed=1)) == []

    def test_radial(self):
        """Test the r and r⁻¹ rules."""
        assert _failed(radial_records(trials=2, seed=1)) == []

    def test_fock(self):
        """Test the numeric ladder records at a small cutoff."""
        assert _failed(fock_records(6, 1e-9, trials=2, seed=1)) == []

    def test_suite(self, small_settings):
        """Test the full weyl suite."""
        records = run_checks(small_settings)
        assert _failed(records) == []
        assert {r.id for r in records} >= {"weyl.jacobi", "fock.ccr"}
