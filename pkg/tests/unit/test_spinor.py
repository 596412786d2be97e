"""Tests for the Dirac spinor layer."""

import pytest
import sympy

from dirac_landau_verify.components.check_record import CheckStatus
from dirac_landau_verify.components.errors import VerificationError
from dirac_landau_verify.components.landau import OSCILLATOR
from dirac_landau_verify.components.scalar import HALF, Scalar
from dirac_landau_verify.components.spinor import (
    DIRAC4,
    MINKOWSKI,
    SU22,
    SpinorBilinear,
    build_gamma,
    build_sigma,
    casimir_helicity,
    dirac_spinor,
    expected_partner,
    gamma_records,
    helicity,
    ladder_records,
    ladder_representation,
    majorana_pairing,
    majorana_records,
    majorana_reduce,
    majorana_spinor,
    psi_transpose_c,
    sigma_records,
)
from dirac_landau_verify.components.weyl import commutator


def _failed(records):
    return [r.id for r in records if r.status is CheckStatus.FAIL]


class TestGamma:
    """Test gamma matrices and σ^{AB}."""

    def test_clifford(self):
        """Test {γ^μ, γ^ν} = 2η^{μν}."""
        gamma = build_gamma()
        for mu in range(4):
            assert gamma.anticommutator(mu, mu) == 2 * MINKOWSKI[mu] * sympy.eye(4)
        assert gamma.anticommutator(0, 2).is_zero_matrix

    def test_gamma_records(self):
        """Test charge conjugation, β and γ⁵ properties."""
        assert _failed(gamma_records()) == []

    def test_fifteen_sigmas(self):
        """Test σ^{AB} covers every pair of −1, 0, 1, 2, 3, 5."""
        assert set(build_sigma()) == set(SU22.pairs())

    def test_sigma_minus_one_mu(self):
        """Test σ^{−1,μ} = −½γ^μ."""
        assert build_sigma()[(-1, 1)] == -build_gamma().gammas[1] / 2

    def test_sigma_closure(self):
        """Test σ^{AB} close as su(2,2) and are β-pseudo-Hermitian."""
        assert _failed(sigma_records()) == []


class TestBilinears:
    """Test the four-mode ladder realization."""

    def test_ccr_checked_on_construction(self):
        """Test a bad ψ, ψ̄ pairing is rejected."""
        z1, z2, zb1, zb2 = DIRAC4.gens("z1", "z2", "zb1", "zb2")
        with pytest.raises(VerificationError):
            SpinorBilinear((z1, z2, zb1, zb2), (z1, z2, zb1, zb2), "broken")

    def test_identity_bilinear_is_casimir(self):
        """Test ψ̄ψ + 2 = z∂ − z̄∂̄."""
        report = casimir_helicity()
        assert report.identity_holds
        assert all(report.central.values())

    def test_ladder_representation(self):
        """Test J^{AB} has one element per su(2,2) pair on the four modes."""
        gens = ladder_representation()
        assert set(gens) == set(SU22.pairs())
        assert all(g.signature == DIRAC4 for g in gens.values())

    def test_ladder_records(self):
        """Test closure, homomorphism and structure constants of J^{AB}."""
        assert _failed(ladder_records(seed=11)) == []

    def test_bilinear_linear_in_matrix(self):
        """Test ψ̄(A + B)ψ = ψ̄Aψ + ψ̄Bψ."""
        spinor = dirac_spinor()
        a = sympy.Matrix(4, 4, lambda i, j: i - j)
        b = sympy.eye(4) * 2
        assert spinor.bilinear(a + b) == spinor.bilinear(a) + spinor.bilinear(b)

    def test_spinors_built_once(self):
        """Test the spinors are shared and generators() hands out copies."""
        assert dirac_spinor() is dirac_spinor()
        assert majorana_spinor() is majorana_spinor()
        gens = ladder_representation()
        gens.clear()
        assert len(ladder_representation()) == 15


class TestHelicity:
    """Test the helicity operator on monomial states."""

    def test_values(self):
        """Test λ on 1, z¹, z̄², z¹z̄¹ and z¹z²."""
        h = casimir_helicity().helicities
        assert h["1"] == 0
        assert h["z1"] == -HALF
        assert h["zb2"] == HALF
        assert h["z1*zb1"] == 0
        assert h["z1*z2"] == Scalar(-1)

    def test_non_eigenstate(self):
        """Test a mixed state has no helicity."""
        z1, zb1 = DIRAC4.gens("z1", "zb1")
        assert helicity(z1 + zb1) is None


class TestMajorana:
    """Test the reduction onto the Landau oscillators."""

    def test_vanishing_generators(self):
        """Test exactly the J^{A5} vanish and the rest span 10 dimensions."""
        report = majorana_reduce()
        assert sorted(report.vanishing) == sorted(p for p in SU22.pairs() if 5 in p)
        assert report.span_rank == 10

    def test_expected_partner(self):
        """Test J^{12} = 2·m12: the sign s₁s₂ = −1 cancels against m21 = −m12."""
        assert expected_partner(1, 2) == ("m12", Scalar(2))

    def test_records(self):
        """Test all Majorana records pass."""
        assert _failed(majorana_records()) == []

    def test_psi_pairing(self):
        """Test ψ = (b⁻, a⁻, −a⁺, b⁺) pairs ψ¹ with ψ⁴ and ψ³ with ψ²."""
        psi = majorana_spinor().psi
        one = OSCILLATOR.one()
        assert commutator(psi[0], psi[3]) == one
        assert commutator(psi[3], psi[0]) == -one
        assert commutator(psi[2], psi[1]) == one
        assert commutator(psi[1], psi[2]) == -one
        assert commutator(psi[0], psi[1]).is_zero()
        assert commutator(psi[0], psi[2]).is_zero()
        assert commutator(psi[1], psi[3]).is_zero()

    def test_pairing_table(self):
        """Test the pairing table has exactly four nonzero entries."""
        table = majorana_pairing()
        nonzero = {pair: k for pair, k in table.items() if k}
        assert nonzero == {(0, 3): 1, (3, 0): -1, (2, 1): 1, (1, 2): -1}

    def test_conjugation(self):
        """Test ψ̄ = ψᵀC component by component."""
        spinor = majorana_spinor()
        for b in range(4):
            assert spinor.psi_bar[b] == psi_transpose_c(spinor, b)

    def test_pairing_records_pass(self):
        """Test the pairing and conjugation records are present and pass."""
        records = {r.id: r for r in majorana_records()}
        pairing = records["spinor.majorana.psi-pairing"]
        assert pairing.status is CheckStatus.PASS
        assert pairing.convention_notes["instances"] == 16
        assert records["spinor.majorana.conjugation"].status is CheckStatus.PASS
