"""
Jordan algebras of 2×2 Hermitian matrices.

J^C_2 is spanned by σ0..σ3 with Minkowski coordinates x^μ; J^R_2 is its real
symmetric part, spanned by σ0, σ1, σ3 and renamed to y^0, y^1, y^2. All
arithmetic is over exact rationals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Sequence

import numpy as np
import sympy

from .check_record import CheckRecord, make_record
from .errors import JordanFieldError

if TYPE_CHECKING:
    from ..verify_config import SuiteConfig

logger = logging.getLogger(__name__)

SAMPLE_RANGE = 5


class JordanField(str, Enum):
    """Real symmetric or complex Hermitian 2×2 matrices."""

    REAL = "real"
    COMPLEX = "complex"

    @property
    def dimension(self) -> int:
        return 3 if self is JordanField.REAL else 4

    @property
    def metric(self) -> tuple[int, ...]:
        return (1,) + (-1,) * (self.dimension - 1)

    @property
    def pauli_indices(self) -> tuple[int, ...]:
        """Pauli matrix behind each coordinate."""
        return (0, 1, 3) if self is JordanField.REAL else (0, 1, 2, 3)


def _fraction(value: Any) -> Fraction:
    if isinstance(value, sympy.Basic):
        value = sympy.nsimplify(value)
        if not value.is_Rational:
            raise JordanFieldError(f"Coordinate {value} is not rational")
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


@dataclass(frozen=True)
class JordanElement:
    """x = x^μ σ_μ with rational coordinates."""

    field: JordanField
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.field.dimension:
            raise JordanFieldError(
                f"{self.field.value} elements have {self.field.dimension} "
                f"coordinates, got {len(self.coords)}"
            )
        object.__setattr__(self, "coords", tuple(_fraction(c) for c in self.coords))

    @classmethod
    def of(cls, field: JordanField, *coords: Any) -> JordanElement:
        return cls(field, tuple(coords))

    @classmethod
    def basis(cls, field: JordanField, mu: int) -> JordanElement:
        """Basis element e_μ (σ_μ, or its renamed real counterpart)."""
        return cls(field, tuple(int(k == mu) for k in range(field.dimension)))

    @classmethod
    def zero(cls, field: JordanField) -> JordanElement:
        return cls(field, (0,) * field.dimension)

    @classmethod
    def from_matrix(cls, matrix: sympy.Matrix, field: JordanField) -> JordanElement:
        """
        Coordinates x^μ = ½ tr(x σ_μ).

        Raises:
            JordanFieldError: if the matrix is not Hermitian, or has a σ2 part
                in the real case
        """
        values = []
        for mu in range(4):
            value = sympy.expand((matrix * PAULI[mu]).trace() / 2)
            if sympy.im(value) != 0:
                raise JordanFieldError(f"Matrix is not Hermitian: {matrix.tolist()}")
            values.append(_fraction(sympy.re(value)))
        if field is JordanField.REAL:
            if values[2]:
                raise JordanFieldError("Real Jordan elements have no σ2 component")
            return cls(field, (values[0], values[1], values[3]))
        return cls(field, tuple(values))

    def matrix(self) -> sympy.Matrix:
        """2×2 block form [[x0 + x3, x1 − i x2], [x1 + i x2, x0 − x3]]."""
        x = dict(zip(self.field.pauli_indices, self.coords))
        x0, x1, x2, x3 = (sympy.Rational(x.get(k, 0)) for k in range(4))
        return sympy.Matrix(
            [[x0 + x3, x1 - sympy.I * x2], [x1 + sympy.I * x2, x0 - x3]]
        )

    def _check(self, other: JordanElement) -> None:
        if self.field is not other.field:
            raise JordanFieldError(
                f"Cannot combine {self.field.value} and {other.field.value} elements"
            )

    def __add__(self, other: JordanElement) -> JordanElement:
        self._check(other)
        return JordanElement(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: JordanElement) -> JordanElement:
        self._check(other)
        return JordanElement(
            self.field, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> JordanElement:
        return JordanElement(self.field, tuple(-a for a in self.coords))

    def scale(self, factor: Any) -> JordanElement:
        f = Fraction(factor)
        return JordanElement(self.field, tuple(f * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def max_abs(self) -> float:
        return float(max(abs(c) for c in self.coords))

    def to_json(self) -> dict[str, Any]:
        return {"field": self.field.value, "coords": [str(c) for c in self.coords]}

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


PAULI = (
    sympy.eye(2),
    sympy.Matrix([[0, 1], [1, 0]]),
    sympy.Matrix([[0, -sympy.I], [sympy.I, 0]]),
    sympy.Matrix([[1, 0], [0, -1]]),
)


def jordan_product(a: JordanElement, b: JordanElement) -> JordanElement:
    """a∘b = ½(ab + ba), read off in coordinates (σ_i∘σ_j = δ_ij σ0)."""
    a._check(b)
    x, y = a.coords, b.coords
    scalar = x[0] * y[0] + sum(x[k] * y[k] for k in range(1, len(x)))
    vector = tuple(x[0] * y[k] + y[0] * x[k] for k in range(1, len(x)))
    return JordanElement(a.field, (scalar,) + vector)


def matrix_product(a: JordanElement, b: JordanElement) -> JordanElement:
    """The symmetrized matrix product, computed on the 2×2 matrices."""
    a._check(b)
    m, n = a.matrix(), b.matrix()
    symmetric = ((m * n + n * m) / 2).applyfunc(sympy.expand)
    return JordanElement.from_matrix(symmetric, a.field)


def triple_product(
    a: JordanElement, b: JordanElement, c: JordanElement
) -> JordanElement:
    """(abc) = a∘(b∘c) − b∘(a∘c) + (a∘b)∘c."""
    a._check(b)
    b._check(c)
    return (
        jordan_product(a, jordan_product(b, c))
        - jordan_product(b, jordan_product(a, c))
        + jordan_product(jordan_product(a, b), c)
    )


def minkowski_norm(a: JordanElement) -> Fraction:
    """det x = g_μν x^μ x^ν."""
    return _fraction(sympy.expand(a.matrix().det()))


def metric_norm(a: JordanElement) -> Fraction:
    return sum((g * c * c for g, c in zip(a.field.metric, a.coords)), Fraction(0))


def project_real(a: JordanElement) -> JordanElement:
    """Drop the σ2 coordinate: (x0, x1, x2, x3) → (y0, y1, y2) = (x0, x1, x3)."""
    if a.field is not JordanField.COMPLEX:
        raise JordanFieldError("project_real expects a complex element")
    x0, x1, _, x3 = a.coords
    return JordanElement(JordanField.REAL, (x0, x1, x3))


def embed_complex(y: JordanElement) -> JordanElement:
    """Real element as the σ2-free complex element."""
    if y.field is not JordanField.REAL:
        raise JordanFieldError("embed_complex expects a real element")
    y0, y1, y2 = y.coords
    return JordanElement(JordanField.COMPLEX, (y0, y1, Fraction(0), y2))


# 4-index table: table[α][β][γ][ρ] is the σ_ρ coefficient of (σ_α σ_β σ_γ)
Table4 = tuple[tuple[tuple[tuple[Fraction, ...], ...], ...], ...]


@dataclass(frozen=True)
class TripleConstants:
    """Structure constants Σ^{βρ}_{αγ} of the Jordan triple product."""

    field: JordanField
    table: Table4

    def entry(self, alpha: int, beta: int, gamma: int, rho: int) -> Fraction:
        return self.table[alpha][beta][gamma][rho]

    def mismatches(self, other: TripleConstants) -> list[tuple[int, int, int, int]]:
        n = self.field.dimension
        return [
            (a, b, c, r)
            for a in range(n)
            for b in range(n)
            for c in range(n)
            for r in range(n)
            if self.entry(a, b, c, r) != other.entry(a, b, c, r)
        ]

    def is_outer_symmetric(self) -> bool:
        """Σ^{βρ}_{αγ} = Σ^{βρ}_{γα}."""
        n = self.field.dimension
        return all(
            self.entry(a, b, c, r) == self.entry(c, b, a, r)
            for a in range(n)
            for b in range(n)
            for c in range(n)
            for r in range(n)
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "field": self.field.value,
            "table": [
                [[[str(v) for v in row] for row in plane] for plane in block]
                for block in self.table
            ],
        }


def computed_constants(field: JordanField) -> TripleConstants:
    """Evaluate the triple product on all basis triples."""
    n = field.dimension
    e = [JordanElement.basis(field, mu) for mu in range(n)]
    table = tuple(
        tuple(
            tuple(triple_product(e[a], e[b], e[c]).coords for c in range(n))
            for b in range(n)
        )
        for a in range(n)
    )
    return TripleConstants(field, table)


def closed_form_constants(field: JordanField) -> TripleConstants:
    """δ^ρ_γ δ^β_α + δ^ρ_α δ^β_γ − g^{βρ} g_{αγ}."""
    n = field.dimension
    g = field.metric

    def value(a: int, b: int, c: int, r: int) -> Fraction:
        total = int(r == c and b == a) + int(r == a and b == c)
        if b == r and a == c:
            total -= g[b] * g[a]
        return Fraction(total)

    table = tuple(
        tuple(
            tuple(tuple(value(a, b, c, r) for r in range(n)) for c in range(n))
            for b in range(n)
        )
        for a in range(n)
    )
    return TripleConstants(field, table)


@dataclass(frozen=True)
class ConstantsReport:
    computed: TripleConstants
    closed_form: TripleConstants
    mismatches: tuple[tuple[int, int, int, int], ...]

    @property
    def matches(self) -> bool:
        return not self.mismatches


def structure_constants(field: JordanField) -> ConstantsReport:
    """Computed and closed-form tables with the list of differing entries."""
    computed = computed_constants(field)
    closed = closed_form_constants(field)
    mismatches = tuple(computed.mismatches(closed))
    logger.debug(
        f"Jordan constants ({field.value}): {len(mismatches)} mismatching entries"
    )
    return ConstantsReport(computed, closed, mismatches)


def random_elements(
    field: JordanField, count: int, rng: np.random.Generator
) -> list[JordanElement]:
    """Elements with integer coordinates in [−5, 5]."""
    data = rng.integers(-SAMPLE_RANGE, SAMPLE_RANGE + 1, size=(count, field.dimension))
    return [JordanElement(field, tuple(int(v) for v in row)) for row in data]


def _identity_record(
    check_id: str,
    description: str,
    pairs: Sequence[tuple[JordanElement, JordanElement]],
) -> CheckRecord:
    worst = 0.0
    first_bad = None
    for lhs, rhs in pairs:
        diff = lhs - rhs
        if not diff.is_zero():
            worst = max(worst, diff.max_abs())
            first_bad = first_bad or (lhs, rhs)
    return make_record(
        check_id,
        description,
        first_bad is None,
        residual=worst,
        lhs=str(first_bad[0]) if first_bad else None,
        rhs=str(first_bad[1]) if first_bad else None,
        notes={"samples": len(pairs)},
    )


def verify_jordan_identities(
    field: JordanField, trials: int, seed: int
) -> list[CheckRecord]:
    """
    Commutativity, Jordan identity, (abc) = (cba) and the five-term identity.

    Args:
        field: Which Jordan algebra to sample
        trials: Number of random tuples per identity
        seed: Seed of the sampling generator

    Returns:
        One record per identity
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = np.random.default_rng(seed)
    prefix = f"jordan.{field.value}"
    commutative, jordan, symmetric, five_term = [], [], [], []
    for _ in range(trials):
        a, b, c, d, x = random_elements(field, 5, rng)
        commutative.append((jordan_product(a, b), jordan_product(b, a)))
        a2 = jordan_product(a, a)
        jordan.append(
            (
                jordan_product(a, jordan_product(a2, b)),
                jordan_product(a2, jordan_product(a, b)),
            )
        )
        symmetric.append((triple_product(a, b, c), triple_product(c, b, a)))
        lhs = triple_product(a, b, triple_product(c, d, x)) - triple_product(
            c, d, triple_product(a, b, x)
        )
        rhs = triple_product(a, triple_product(d, c, b), x) - triple_product(
            triple_product(c, d, a), b, x
        )
        five_term.append((lhs, rhs))
    return [
        _identity_record(f"{prefix}.commutative", "a∘b = b∘a", commutative),
        _identity_record(
            f"{prefix}.jordan-identity", "a∘(a²∘b) = a²∘(a∘b)", jordan
        ),
        _identity_record(f"{prefix}.triple-symmetry", "(abc) = (cba)", symmetric),
        _identity_record(
            f"{prefix}.five-term",
            "(ab(cdx)) − (cd(abx)) = (a(dcb)x) − ((cda)bx)",
            five_term,
        ),
    ]


def product_matches_matrices(field: JordanField) -> CheckRecord:
    """Coordinate product agrees with ½(ab + ba) on all basis pairs."""
    n = field.dimension
    e = [JordanElement.basis(field, mu) for mu in range(n)]
    pairs = [
        (jordan_product(e[a], e[b]), matrix_product(e[a], e[b]))
        for a in range(n)
        for b in range(n)
    ]
    return _identity_record(
        f"jordan.{field.value}.product-matrix-form",
        "coordinate product equals the symmetrized matrix product",
        pairs,
    )


def real_restriction_record() -> CheckRecord:
    """The real table is the complex one restricted to σ0, σ1, σ3."""
    complex_table = computed_constants(JordanField.COMPLEX)
    real_table = computed_constants(JordanField.REAL)
    keep = JordanField.REAL.pauli_indices
    bad = [
        (a, b, c, r)
        for a in range(3)
        for b in range(3)
        for c in range(3)
        for r in range(3)
        if real_table.entry(a, b, c, r)
        != complex_table.entry(keep[a], keep[b], keep[c], keep[r])
    ]
    return make_record(
        "jordan.real-restriction",
        "real constants equal the complex constants on indices {0, 1, 3}",
        not bad,
        residual=float(len(bad)),
        notes={"mismatches": [list(i) for i in bad[:5]]},
    )


def projection_records() -> list[CheckRecord]:
    """Projection to J^R_2 commutes with triple products on σ2-free inputs."""
    reals = [JordanElement.basis(JordanField.REAL, mu) for mu in range(3)]
    pairs = []
    for a in reals:
        for b in reals:
            for c in reals:
                lifted = triple_product(
                    embed_complex(a), embed_complex(b), embed_complex(c)
                )
                pairs.append((project_real(lifted), triple_product(a, b, c)))
    sigma2 = JordanElement.basis(JordanField.COMPLEX, 2)
    return [
        _identity_record(
            "jordan.projection.triple-products",
            "π((abc)) = (π(a)π(b)π(c)) for σ2-free basis triples",
            pairs,
        ),
        make_record(
            "jordan.projection.kernel",
            "σ2 projects to zero",
            project_real(sigma2).is_zero(),
        ),
    ]


def norm_records(trials: int, seed: int) -> list[CheckRecord]:
    """det x equals the Minkowski form in both fields."""
    rng = np.random.default_rng(seed + 1)
    records = []
    for field in (JordanField.COMPLEX, JordanField.REAL):
        samples = random_elements(field, trials, rng)
        bad = [s for s in samples if minkowski_norm(s) != metric_norm(s)]
        records.append(
            make_record(
                f"jordan.{field.value}.determinant-norm",
                "det x = g_μν x^μ x^ν",
                not bad,
                notes={"samples": trials},
            )
        )
    return records


def run_checks(settings: SuiteConfig) -> list[CheckRecord]:
    """Full Jordan suite."""
    records: list[CheckRecord] = []
    for field in (JordanField.COMPLEX, JordanField.REAL):
        records.append(product_matches_matrices(field))
        report = structure_constants(field)
        n = field.dimension**4
        records.append(
            make_record(
                f"jordan.{field.value}.structure-constants",
                f"Σ matches δδ + δδ − gg on all {n} index combinations",
                report.matches,
                residual=float(len(report.mismatches)),
                notes={"combinations": n},
            )
        )
        records.append(
            make_record(
                f"jordan.{field.value}.outer-symmetry",
                "Σ^{βρ}_{αγ} = Σ^{βρ}_{γα}",
                report.computed.is_outer_symmetric(),
            )
        )
        records.extend(verify_jordan_identities(field, settings.trials, settings.seed))
    records.append(real_restriction_record())
    records.extend(projection_records())
    records.extend(norm_records(settings.trials, settings.seed))
    return records
