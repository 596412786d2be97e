"""Tests for the hydrogen so(2,4) generators."""

from dirac_landau_verify.components.check_record import CheckStatus
from dirac_landau_verify.components.hydrogen import (
    DENOMINATOR_BOUND,
    PLANAR,
    RADIAL,
    SO24,
    Ordering,
    build_hydrogen_generators,
    generator_records,
    lab_entry,
    map_to_LAB,
    planar_records,
    radial_records,
    radial_so12,
    reduce_to_2d,
    verify_so24_hydrogen,
)
from dirac_landau_verify.components.scalar import I
from dirac_landau_verify.components.weyl import commutator


def _failed(records):
    return [r.id for r in records if r.status is CheckStatus.FAIL]


class TestGenerators:
    """Test the fifteen radial generators."""

    def test_fifteen_generators(self):
        """Test the table covers every pair of the six indices."""
        table = map_to_LAB(build_hydrogen_generators())
        assert set(table) == set(SO24.pairs())
        assert len(table) == 15

    def test_antisymmetric_lookup(self):
        """Test L_ba = −L_ab."""
        table = map_to_LAB(build_hydrogen_generators())
        assert lab_entry(table, 5, -1) == -table[(-1, 5)]
        assert lab_entry(table, 2, 2).is_zero()

    def test_defining_identities(self):
        """Test D = x·p − i and B0 ± A0."""
        assert _failed(generator_records(build_hydrogen_generators())) == []

    def test_angular_momentum(self):
        """Test [L1, L2] = i L3."""
        h = build_hydrogen_generators()
        assert commutator(h.L[0], h.L[1]) == h.L[2].scale(I)

    def test_orderings_differ_by_lower_order(self):
        """Test r·p and its symmetrization differ by a derivative-free term."""
        printed = build_hydrogen_generators(Ordering.PRINTED)
        symmetric = build_hydrogen_generators(Ordering.SYMMETRIZED)
        difference = printed.gamma[0] - symmetric.gamma[0]
        assert not difference.is_zero()
        assert not difference.has_derivatives()

    def test_json(self):
        """Test the generator dictionary serializes every entry."""
        data = build_hydrogen_generators().to_json()
        assert data["ordering"] == "printed"
        assert len(data["generators"]) == 15


class TestRadialSubalgebra:
    """Test the so(2,1) of A0, D and B0."""

    def test_closes(self):
        """Test A0, D, B0 close under the bracket."""
        report = radial_so12()
        assert report.closes
        assert report.closure.passed

    def test_records(self):
        """Test the radial identities pass."""
        assert _failed(radial_records(build_hydrogen_generators())) == []

    def test_r_is_b0_minus_a0(self):
        """Test B0 − A0 = r."""
        h = build_hydrogen_generators()
        assert h.B0 - h.A0 == RADIAL.radius()


class TestClosure:
    """Test the full so(2,4) closure and its planar reduction."""

    def test_so24(self):
        """Test all 105 brackets close with one sign and bounded denominators."""
        closure = verify_so24_hydrogen()
        assert closure.report.passed
        assert len(closure.report.checks) == 105
        assert closure.max_denominator_power <= DENOMINATOR_BOUND
        assert closure.tried[0] is Ordering.PRINTED

    def test_planar(self):
        """Test the index-3-free generators close as so(2,3) like the Landau set."""
        closure = verify_so24_hydrogen()
        records = planar_records(closure.ordering)
        assert _failed(records) == []
        assert len(PLANAR.pairs()) == 10

    def test_reduce_to_2d(self):
        """Test the index-3-free generators form a closed set of ten."""
        reduction = reduce_to_2d()
        assert set(reduction.generators) == set(PLANAR.pairs())
        assert reduction.closure.passed
        assert "L-10" in reduction.labels
