"""Tests for check records and the known-discrepancy registry."""

from dirac_landau_verify.components.check_record import (
    KNOWN_DISCREPANCIES,
    CheckRecord,
    CheckStatus,
    exact_check,
    exact_family_check,
    known_discrepancy,
    make_record,
    numeric_check,
)
from dirac_landau_verify.components.landau import HOLOMORPHIC


class TestKnownDiscrepancies:
    """Test registry lookups."""

    def test_exact_id(self):
        """Test a registered id returns its reason."""
        reason = known_discrepancy("transforms.hopf-norm.paper-literal")
        assert reason == KNOWN_DISCREPANCIES["transforms.hopf-norm.paper-literal"]

    def test_wildcard_family(self):
        """Test "prefix.*" entries match any suffix."""
        assert known_discrepancy("tkk.printed-signs.complex") is not None
        assert known_discrepancy("tkk.printed.s-equals-m-minus-delta-d.real")

    def test_unregistered(self):
        """Test other ids have no reason."""
        assert known_discrepancy("transforms.hopf-norm.hopf-normalized") is None
        assert known_discrepancy("tkk.printed-signs") is None

    def test_every_entry_has_a_reason(self):
        """Test each registered id carries a non-empty one-line reason."""
        for check_id, reason in KNOWN_DISCREPANCIES.items():
            assert check_id.split(".")[0] in {"landau", "tkk", "transforms"}
            assert reason.strip()
            assert "\n" not in reason


class TestMakeRecord:
    """Test status assignment."""

    def test_pass(self):
        """Test ok checks pass regardless of registration."""
        record = make_record("transforms.hopf-norm.paper-literal", "norm", True)
        assert record.status is CheckStatus.PASS
        assert not record.failed

    def test_fail(self):
        """Test unregistered failures fail."""
        record = make_record("weyl.jacobi", "Jacobi", False, residual=2.0)
        assert record.status is CheckStatus.FAIL
        assert record.failed
        assert record.residual == 2.0

    def test_expected_fail_adds_reason(self):
        """Test registered failures are downgraded and annotated."""
        record = make_record(
            "landau.printed.holomorphic.m03", "printed", False, notes={"k": 1}
        )
        assert record.status is CheckStatus.EXPECTED_FAIL
        assert not record.failed
        assert record.convention_notes["k"] == 1
        assert "known_discrepancy" in record.convention_notes

    def test_dict_form(self):
        """Test to_dict uses the status string and from_dict restores it."""
        record = make_record("weyl.x", "x", False, lhs="a", rhs="b")
        data = record.to_dict()
        assert data["status"] == "fail"
        assert CheckRecord.from_dict(data) == record

    def test_from_dict_defaults(self):
        """Test optional fields default when absent."""
        record = CheckRecord.from_dict({"id": "a.b", "status": "pass"})
        assert record.description == ""
        assert record.residual == 0.0
        assert record.convention_notes == {}


class TestCheckHelpers:
    """Test exact and numeric check helpers."""

    def test_exact_check_pass(self):
        """Test equal elements pass with zero residual."""
        z, d = HOLOMORPHIC.gens("z", "dz")
        record = exact_check("weyl.t", "∂z = z∂ + 1", d * z, z * d + 1)
        assert record.status is CheckStatus.PASS
        assert record.residual == 0.0

    def test_exact_check_residual(self):
        """Test the residual is the largest coefficient of the difference."""
        z = HOLOMORPHIC.gen("z")
        record = exact_check("weyl.t", "z + 3 = z", z + 3, z)
        assert record.status is CheckStatus.FAIL
        assert record.residual == 3.0
        assert record.lhs == (z + 3).to_text()

    def test_numeric_check(self):
        """Test tolerance comparison and the recorded tolerance."""
        ok = numeric_check("fock.t", "small", 1e-12, 1e-10)
        bad = numeric_check("fock.t", "large", 1e-3, 1e-10)
        assert ok.status is CheckStatus.PASS
        assert ok.convention_notes["tolerance"] == 1e-10
        assert bad.status is CheckStatus.FAIL

    def test_family_check_counts_failures(self):
        """Test failures are counted and the first mismatch reported."""
        z = HOLOMORPHIC.gen("z")
        pairs = [(z, z), (z + 1, z), (z + 2, z)]
        record = exact_family_check("weyl.t", "family", pairs)
        assert record.status is CheckStatus.FAIL
        assert record.convention_notes["instances"] == 3
        assert record.convention_notes["failures"] == 2
        assert record.residual == 2.0
        assert record.lhs == (z + 1).to_text()
