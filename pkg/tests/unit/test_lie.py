"""Tests for Lie-algebra presentations, closure and structure constants."""

import pytest
import sympy

from dirac_landau_verify.components.lie import (
    MATRIX_OPS,
    LiePresentation,
    RuleStyle,
    closes_in_span,
    killing_signature,
    match_generators,
    rank,
    solve_in_span,
    structure_constants,
    verify_closure,
)
from dirac_landau_verify.components.scalar import I, Scalar

SO3 = LiePresentation("so(3)", (1, 2, 3), (1, 1, 1), RuleStyle.CO)


def _antisymmetric(a: int, b: int) -> sympy.Matrix:
    """e_ab − e_ba as a 3×3 matrix (indices 1-based)."""
    m = sympy.zeros(3, 3)
    m[a - 1, b - 1] = 1
    m[b - 1, a - 1] = -1
    return m


@pytest.fixture
def so3_generators():
    """−i(e_ab − e_ba), which close under the co rule with sign +1."""
    return {pair: -sympy.I * _antisymmetric(*pair) for pair in SO3.pairs()}


class TestLiePresentation:
    """Test index bookkeeping and the bracket rules."""

    def test_pairs(self):
        """Test canonical pairs follow index order."""
        assert SO3.pairs() == [(1, 2), (1, 3), (2, 3)]

    def test_canonical(self):
        """Test reordering flips the sign and the diagonal vanishes."""
        assert SO3.canonical(2, 1) == ((1, 2), -1)
        assert SO3.canonical(1, 1) == (None, 0)

    def test_expected_co_rule(self):
        """Test [g12, g23] = −i g13 under the co rule."""
        assert SO3.expected((1, 2), (2, 3)) == {(1, 3): 1}

    def test_expected_conf_plus_rule(self):
        """Test the conf+ rule is the negative of the co rule."""
        conf = LiePresentation("so(3)", (1, 2, 3), (1, 1, 1), RuleStyle.CONF_PLUS)
        assert conf.expected((1, 2), (2, 3)) == {(1, 3): -1}

    def test_invalid_metric(self):
        """Test metric entries must be ±1 and match the indices."""
        with pytest.raises(ValueError):
            LiePresentation("bad", (1, 2), (1, 2), RuleStyle.CO)
        with pytest.raises(ValueError):
            LiePresentation("bad", (1, 2), (1,), RuleStyle.CO)


class TestVerifyClosure:
    """Test closure against a presentation."""

    def test_so3_closes(self, so3_generators):
        """Test −i(e_ab − e_ba) closes with sign +1."""
        report = verify_closure(so3_generators, SO3, MATRIX_OPS)
        assert report.passed
        assert report.sign == 1
        assert len(report.checks) == 3

    def test_sign_is_fitted(self, so3_generators):
        """Test negated generators close with sign −1."""
        negated = {p: -m for p, m in so3_generators.items()}
        report = verify_closure(negated, SO3, MATRIX_OPS)
        assert report.passed
        assert report.sign == -1

    def test_fixed_wrong_sign_fails(self, so3_generators):
        """Test forcing the wrong sign reports every bracket."""
        report = verify_closure(so3_generators, SO3, MATRIX_OPS, sign=-1)
        assert not report.passed
        assert len(report.failures) == 3
        assert report.max_residual > 0

    def test_missing_generator(self, so3_generators):
        """Test that every canonical pair needs a generator."""
        del so3_generators[(1, 2)]
        with pytest.raises(ValueError):
            verify_closure(so3_generators, SO3, MATRIX_OPS)


class TestStructureConstants:
    """Test span decomposition and structure constants."""

    def test_rank(self):
        """Test exact rank of dependent vectors."""
        vectors = [{"a": Scalar(1), "b": Scalar(2)}, {"a": Scalar(2), "b": Scalar(4)}]
        assert rank(vectors) == 1

    def test_solve_in_span(self):
        """Test coefficients are recovered exactly."""
        basis = [{"a": Scalar(1)}, {"b": Scalar(1)}]
        target = {"a": Scalar(3), "b": I}
        assert solve_in_span(target, basis) == [Scalar(3), I]
        assert solve_in_span({"c": Scalar(1)}, basis) is None

    def test_so3_constants(self, so3_generators):
        """Test [g12, g23] = −i g13 and the compact Killing signature."""
        elements = [so3_generators[p] for p in SO3.pairs()]
        sc = structure_constants(elements, ["m12", "m13", "m23"], MATRIX_OPS)
        assert sc.table[0][2][1] == -I
        assert sc.table[2][0][1] == I
        assert killing_signature(sc) == (0, 3)

    def test_json_lists_upper_triangle(self, so3_generators):
        """Test to_json keeps i < j entries only."""
        elements = [so3_generators[p] for p in SO3.pairs()]
        sc = structure_constants(elements, ["m12", "m13", "m23"], MATRIX_OPS)
        entries = sc.to_json()["entries"]
        assert len(entries) == 3
        assert all(e["i"] < e["j"] for e in entries)

    def test_not_closed(self):
        """Test e12 and e21 do not close (their bracket is diagonal)."""
        e12 = sympy.Matrix([[0, 1], [0, 0]])
        e21 = sympy.Matrix([[0, 0], [1, 0]])
        assert not closes_in_span([e12, e21], MATRIX_OPS)
        with pytest.raises(ValueError):
            structure_constants([e12, e21], ["e12", "e21"], MATRIX_OPS)

    def test_match_generators(self, so3_generators):
        """Test proportional generators are paired with their factor."""
        sources = {"twice": so3_generators[(1, 2)] * 2}
        targets = {"m12": so3_generators[(1, 2)], "m13": so3_generators[(1, 3)]}
        assert match_generators(sources, targets, MATRIX_OPS) == {
            "twice": ("m12", Scalar(2))
        }
