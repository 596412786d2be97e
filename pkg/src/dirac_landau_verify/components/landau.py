"""
Landau problem and Dirac's so(2,3) representation.

All algebra runs in dimensionless units (ħ = m = ω = 1) on three presentations
of the same two-mode phase space:

- phase:        positions ξ, η with p = −i∂
- holomorphic:  z, z̄ with ∂, ∂̄
- oscillator:   creation a⁺, b⁺ (positions) and annihilation a⁻, b⁻

A fourth, spinorial, presentation rebuilds the generators as bilinears of the
Weyl spinor χ = (b⁻, a⁻). ``LandauFrame`` converts to Gaussian units only when
energies are reported.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Any, Optional

from scipy import constants

from .check_record import CheckRecord, exact_check, make_record, numeric_check
from .errors import ConfigError, NonCanonicalMapError
from .fock import (
    FockBasis,
    interior_residual,
    hermiticity_residual,
    oscillator_dictionary,
    realize,
    spectrum,
)
from .lie import (
    WEYL_OPS,
    ClosureReport,
    LiePresentation,
    Pair,
    RuleStyle,
    closes_in_span,
    verify_closure,
)
from .scalar import HALF, INV_SQRT2, I, ONE, Scalar
from .weyl import (
    AlgebraSignature,
    LinearMap,
    WeylElement,
    adjoint_type,
    anticommutator,
    commutator,
    compose,
    linear_combination,
    substitute,
)

if TYPE_CHECKING:
    from ..verify_config import SuiteConfig

logger = logging.getLogger(__name__)

# Gaussian (CGS) units
HBAR_CGS = constants.hbar * 1e7
C_CGS = constants.c * 1e2
ELECTRON_MASS_G = constants.m_e * 1e3
ELECTRON_CHARGE_ESU = constants.e * constants.c * 10

QUARTER = Scalar(Fraction(1, 4))

PHASE = AlgebraSignature("phase", ("xi", "eta"), ("d_xi", "d_eta"), adjoint_kind="real")
HOLOMORPHIC = AlgebraSignature(
    "holomorphic", ("z", "zb"), ("dz", "dzb"), adjoint_kind="none"
)
OSCILLATOR = AlgebraSignature(
    "oscillator", ("a_plus", "b_plus"), ("a_minus", "b_minus"), adjoint_kind="ladder"
)

SO23 = LiePresentation("so(2,3)", (-1, 0, 1, 2, 3), (1, 1, -1, -1, -1), RuleStyle.CO)

PRESENTATIONS = ("phase", "holomorphic", "oscillator", "spinorial")
SIGNATURES = {
    "phase": PHASE,
    "holomorphic": HOLOMORPHIC,
    "oscillator": OSCILLATOR,
    "spinorial": OSCILLATOR,
}


def generator_label(a: int, b: int, prefix: str = "m") -> str:
    return f"{prefix}{a}{b}"


@dataclass(frozen=True)
class LandauFrame:
    """Physical frame: field, mass and charge in Gaussian units, or ω directly."""

    field_gauss: float = 1.0e5
    mass_g: float = ELECTRON_MASS_G
    charge_esu: float = ELECTRON_CHARGE_ESU
    omega_override: Optional[float] = None

    def __post_init__(self) -> None:
        if self.omega_override is not None:
            if not self.omega_override > 0:
                raise ConfigError("Cyclotron frequency must be positive")
            return
        for name in ("field_gauss", "mass_g", "charge_esu"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"Landau frame {name} must be positive")

    @property
    def omega(self) -> float:
        """Cyclotron frequency ω = eB/(mc) in rad/s."""
        if self.omega_override is not None:
            return self.omega_override
        return self.charge_esu * self.field_gauss / (self.mass_g * C_CGS)

    @property
    def magnetic_length(self) -> float:
        """ℓ with ℓ² = ħ/(mω) = ħc/(eB), in cm."""
        return math.sqrt(HBAR_CGS / (self.mass_g * self.omega))

    def level_energy(self, n: int) -> float:
        """E_n = ħω(n + ½) in erg."""
        return HBAR_CGS * self.omega * (n + 0.5)

    def to_dict(self) -> dict[str, float]:
        return {
            "field_gauss": self.field_gauss,
            "mass_g": self.mass_g,
            "charge_esu": self.charge_esu,
            "omega": self.omega,
            "magnetic_length_cm": self.magnetic_length,
        }


# ----------------------------------------------------------------------
# Changes of generators
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def holomorphic_to_phase() -> LinearMap:
    """z = (ξ+iη)/√2, ∂ = (∂_ξ − i∂_η)/√2 and conjugates."""
    s = INV_SQRT2
    return LinearMap(
        HOLOMORPHIC,
        PHASE,
        {
            "z": linear_combination(PHASE, [(s, "xi"), (s * I, "eta")]),
            "zb": linear_combination(PHASE, [(s, "xi"), (-s * I, "eta")]),
            "dz": linear_combination(PHASE, [(s, "d_xi"), (-s * I, "d_eta")]),
            "dzb": linear_combination(PHASE, [(s, "d_xi"), (s * I, "d_eta")]),
        },
        "holomorphic->phase",
    )


@lru_cache(maxsize=None)
def phase_to_holomorphic() -> LinearMap:
    s = INV_SQRT2
    return LinearMap(
        PHASE,
        HOLOMORPHIC,
        {
            "xi": linear_combination(HOLOMORPHIC, [(s, "z"), (s, "zb")]),
            "eta": linear_combination(HOLOMORPHIC, [(-s * I, "z"), (s * I, "zb")]),
            "d_xi": linear_combination(HOLOMORPHIC, [(s, "dz"), (s, "dzb")]),
            "d_eta": linear_combination(HOLOMORPHIC, [(s * I, "dz"), (-s * I, "dzb")]),
        },
        "phase->holomorphic",
    )


@lru_cache(maxsize=None)
def oscillator_to_holomorphic() -> LinearMap:
    """a⁻ = (z + ∂̄)/√2, a⁺ = (z̄ − ∂)/√2, b⁻ = (z̄ + ∂)/√2, b⁺ = (z − ∂̄)/√2."""
    s = INV_SQRT2
    return LinearMap(
        OSCILLATOR,
        HOLOMORPHIC,
        {
            "a_minus": linear_combination(HOLOMORPHIC, [(s, "z"), (s, "dzb")]),
            "a_plus": linear_combination(HOLOMORPHIC, [(s, "zb"), (-s, "dz")]),
            "b_minus": linear_combination(HOLOMORPHIC, [(s, "zb"), (s, "dz")]),
            "b_plus": linear_combination(HOLOMORPHIC, [(s, "z"), (-s, "dzb")]),
        },
        "oscillator->holomorphic",
    )


@lru_cache(maxsize=None)
def holomorphic_to_oscillator() -> LinearMap:
    """Inverse ladder map: z = (a⁻ + b⁺)/√2, ∂ = (b⁻ − a⁺)/√2, ..."""
    s = INV_SQRT2
    return LinearMap(
        HOLOMORPHIC,
        OSCILLATOR,
        {
            "z": linear_combination(OSCILLATOR, [(s, "a_minus"), (s, "b_plus")]),
            "zb": linear_combination(OSCILLATOR, [(s, "a_plus"), (s, "b_minus")]),
            "dz": linear_combination(OSCILLATOR, [(s, "b_minus"), (-s, "a_plus")]),
            "dzb": linear_combination(OSCILLATOR, [(s, "a_minus"), (-s, "b_plus")]),
        },
        "holomorphic->oscillator",
    )


@lru_cache(maxsize=None)
def phase_to_oscillator() -> LinearMap:
    return compose(phase_to_holomorphic(), holomorphic_to_oscillator())


@lru_cache(maxsize=None)
def oscillator_to_phase() -> LinearMap:
    return compose(oscillator_to_holomorphic(), holomorphic_to_phase())


@lru_cache(maxsize=None)
def symmetric_to_landau_gauge() -> LinearMap:
    """Conjugation by e^{iξη}: ∂_ξ → ∂_ξ + iη, ∂_η → ∂_η + iξ."""
    return LinearMap(
        PHASE,
        PHASE,
        {
            "xi": PHASE.gen("xi"),
            "eta": PHASE.gen("eta"),
            "d_xi": linear_combination(PHASE, [(ONE, "d_xi"), (I, "eta")]),
            "d_eta": linear_combination(PHASE, [(ONE, "d_eta"), (I, "xi")]),
        },
        "symmetric->landau gauge",
    )


def to_oscillator(e: WeylElement) -> WeylElement:
    """Rewrite a phase, holomorphic or oscillator element in ladder operators."""
    if e.signature == OSCILLATOR:
        return e
    if e.signature == HOLOMORPHIC:
        return substitute(e, holomorphic_to_oscillator())
    if e.signature == PHASE:
        return substitute(e, phase_to_oscillator())
    raise NonCanonicalMapError(f"No ladder map from signature {e.signature.name}")


# ----------------------------------------------------------------------
# Operators
# ----------------------------------------------------------------------


def _phase_symbols() -> tuple[WeylElement, WeylElement, WeylElement, WeylElement]:
    xi, eta, d_xi, d_eta = PHASE.gens("xi", "eta", "d_xi", "d_eta")
    return xi, eta, d_xi * (-I), d_eta * (-I)


@dataclass(frozen=True)
class PhaseOperators:
    """Kinetic momenta, guiding center, Hamiltonian and angular momentum."""

    P_x: WeylElement
    P_y: WeylElement
    X: WeylElement
    Y: WeylElement
    H: WeylElement
    L_z: WeylElement
    frame: LandauFrame


def build_phase_operators(frame: Optional[LandauFrame] = None) -> PhaseOperators:
    """
    Symmetric-gauge operators in ξ, η, p_ξ, p_η.

    P in units √(mωħ), X and Y in units ℓ, H in units ħω, L_z in units ħ.
    """
    xi, eta, p_xi, p_eta = _phase_symbols()
    s = INV_SQRT2
    P_x = (p_xi + eta) * s
    P_y = (p_eta - xi) * s
    H = (P_x * P_x + P_y * P_y) * HALF
    return PhaseOperators(
        P_x=P_x,
        P_y=P_y,
        X=(xi + p_eta) * s,
        Y=(eta - p_xi) * s,
        H=H,
        L_z=xi * p_eta - eta * p_xi,
        frame=frame or LandauFrame(),
    )


def landau_gauge_hamiltonian() -> WeylElement:
    """H = ¼[(p_ξ + 2η)² + p_η²] for the vector potential (−By, 0)."""
    _, eta, p_xi, p_eta = _phase_symbols()
    kinetic = p_xi + eta * 2
    return (kinetic * kinetic + p_eta * p_eta) * QUARTER


@dataclass(frozen=True)
class Oscillators:
    """Energy ladder a± and magnetic translations b±, in phase variables."""

    a_plus: WeylElement
    a_minus: WeylElement
    b_plus: WeylElement
    b_minus: WeylElement

    def as_dict(self) -> dict[str, WeylElement]:
        return {
            "a_plus": self.a_plus,
            "a_minus": self.a_minus,
            "b_plus": self.b_plus,
            "b_minus": self.b_minus,
        }


def build_oscillators(frame: Optional[LandauFrame] = None) -> Oscillators:
    """
    a± = (−P_y ∓ iP_x)/√2 and b± = (X ± iY)/√2.

    Raises:
        NonCanonicalMapError: if the canonical relations fail
    """
    ops = build_phase_operators(frame)
    s = INV_SQRT2
    osc = Oscillators(
        a_plus=(-ops.P_y - ops.P_x * I) * s,
        a_minus=(-ops.P_y + ops.P_x * I) * s,
        b_plus=(ops.X + ops.Y * I) * s,
        b_minus=(ops.X - ops.Y * I) * s,
    )
    one = PHASE.one()
    expected = {
        ("a_minus", "a_plus"): one,
        ("b_minus", "b_plus"): one,
        ("a_minus", "b_plus"): PHASE.zero(),
        ("a_plus", "b_minus"): PHASE.zero(),
        ("a_minus", "b_minus"): PHASE.zero(),
        ("a_plus", "b_plus"): PHASE.zero(),
    }
    values = osc.as_dict()
    for (left, right), value in expected.items():
        got = commutator(values[left], values[right])
        if got != value:
            raise NonCanonicalMapError(
                f"Ladder operators are not canonical: [{left}, {right}] = {got}"
            )
    return osc


@dataclass(frozen=True)
class WeylSpinor:
    """χ = (b⁻, a⁻)ᵀ and χ* = (b⁺, a⁺) in ladder operators."""

    chi: tuple[WeylElement, WeylElement]
    chi_star: tuple[WeylElement, WeylElement]


def weyl_spinor() -> WeylSpinor:
    a_plus, b_plus, a_minus, b_minus = OSCILLATOR.gens(
        "a_plus", "b_plus", "a_minus", "b_minus"
    )
    return WeylSpinor(chi=(b_minus, a_minus), chi_star=(b_plus, a_plus))


# 2×2 matrices with Scalar entries
Matrix2 = tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]

_Z = Scalar(0)
PAULI_T: dict[int, Matrix2] = {
    1: ((_Z, ONE), (ONE, _Z)),
    2: ((_Z, I), (-I, _Z)),
    3: ((ONE, _Z), (_Z, -ONE)),
}
EPSILON: Matrix2 = ((_Z, ONE), (-ONE, _Z))


def _matmul2(a: Matrix2, b: Matrix2) -> Matrix2:
    return tuple(
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)) for i in range(2)
    )  # type: ignore[return-value]


def _transpose2(a: Matrix2) -> Matrix2:
    return ((a[0][0], a[1][0]), (a[0][1], a[1][1]))


def _bilinear(
    left: tuple[WeylElement, WeylElement],
    m: Matrix2,
    right: tuple[WeylElement, WeylElement],
) -> WeylElement:
    total = OSCILLATOR.zero()
    for i in range(2):
        for j in range(2):
            if not m[i][j].is_zero():
                total = total + (left[i] * right[j]) * m[i][j]
    return total


# ----------------------------------------------------------------------
# Generator tables
# ----------------------------------------------------------------------


@dataclass
class DiracGenerators:
    """The ten m_ab of one presentation, keyed by canonical index pair."""

    presentation: str
    elements: dict[Pair, WeylElement]

    def get(self, a: int, b: int) -> WeylElement:
        pair, sign = SO23.canonical(a, b)
        if pair is None:
            return self.signature.zero()
        return self.elements[pair] * sign

    @property
    def signature(self) -> AlgebraSignature:
        return next(iter(self.elements.values())).signature

    def labelled(self) -> dict[str, WeylElement]:
        return {generator_label(*p): e for p, e in self.elements.items()}

    def to_json(self) -> dict[str, Any]:
        return {
            "presentation": self.presentation,
            "signature": self.signature.name,
            "generators": {
                generator_label(*p): {"text": e.to_text(), "terms": e.to_json()}
                for p, e in self.elements.items()
            },
        }


def _canonicalize(printed: dict[Pair, WeylElement]) -> dict[Pair, WeylElement]:
    out = {}
    for (a, b), e in printed.items():
        pair, sign = SO23.canonical(a, b)
        assert pair is not None
        out[pair] = e * sign
    return {p: out[p] for p in SO23.pairs()}


def _phase_table(printed: bool) -> dict[Pair, WeylElement]:
    xi, eta, p_xi, p_eta = _phase_symbols()
    h, q = HALF, QUARTER
    m01 = (xi * p_eta + eta * p_xi) * h
    return {
        (1, 2): (xi * p_eta - eta * p_xi) * h,
        (2, 3): (p_xi * p_xi - p_eta * p_eta + xi * xi - eta * eta) * q,
        (3, 1): (xi * eta + p_xi * p_eta) * (-h),
        (1, -1): (xi * eta - p_xi * p_eta) * h,
        (2, -1): (xi * xi - eta * eta + p_eta * p_eta - p_xi * p_xi) * q,
        (3, -1): (xi * p_xi + eta * p_eta) * h - I * h,
        (0, 1): m01 * I if printed else m01,
        (0, 2): (xi * p_xi - eta * p_eta) * h,
        (0, 3): (p_xi * p_xi + p_eta * p_eta - xi * xi - eta * eta) * q,
        (-1, 0): (p_xi * p_xi + p_eta * p_eta + xi * xi + eta * eta) * q,
    }


def _holomorphic_table(printed: bool) -> dict[Pair, WeylElement]:
    z, zb, d, db = HOLOMORPHIC.gens("z", "zb", "dz", "dzb")
    h, q = HALF, QUARTER
    euler = z * d + zb * db
    return {
        (1, 2): (z * d - zb * db) * h,
        (2, 3): (z * z + zb * zb - d * d - db * db) * q,
        (3, 1): (z * z - zb * zb + d * d - db * db) * (I * q),
        (1, -1): (z * z - zb * zb - d * d + db * db) * (-I * q),
        (2, -1): (z * z + zb * zb + d * d + db * db) * q,
        (3, -1): (euler - 1 if printed else euler + 1) * (-I * h),
        (0, 1): (z * db - zb * d) * (-h),
        (0, 2): (zb * d + z * db) * (-I * h),
        (0, 3): (z * zb + d * db) * (h if printed else -h),
        (-1, 0): (z * zb - d * db) * h,
    }


def _oscillator_table() -> dict[Pair, WeylElement]:
    ap, bp, am, bm = OSCILLATOR.gens("a_plus", "b_plus", "a_minus", "b_minus")
    q = QUARTER
    return {
        (1, 2): (anticommutator(bm, bp) - anticommutator(am, ap)) * q,
        (2, 3): (anticommutator(am, bp) + anticommutator(ap, bm)) * q,
        (3, 1): (anticommutator(am, bp) - anticommutator(ap, bm)) * (I * q),
        (1, -1): (ap * ap - am * am + bm * bm - bp * bp) * (I * q),
        (2, -1): (am * am + ap * ap + bm * bm + bp * bp) * q,
        (3, -1): (anticommutator(am, bm) - anticommutator(ap, bp)) * (-I * q),
        (0, 1): (am * am + ap * ap - bm * bm - bp * bp) * (-q),
        (0, 2): (am * am - ap * ap + bm * bm - bp * bp) * (-I * q),
        (0, 3): (anticommutator(ap, bp) + anticommutator(am, bm)) * (-q),
        (-1, 0): (anticommutator(am, ap) + anticommutator(bm, bp)) * q,
    }


def _spinorial_table() -> dict[Pair, WeylElement]:
    """m_ij = ½ε_ijk χ*σ_kᵀχ, m_−1i, m_0i from the χ*χ* and χχ bilinears."""
    spinor = weyl_spinor()
    chi, chi_star = spinor.chi, spinor.chi_star
    h, q = HALF, QUARTER
    eps_t = _transpose2(EPSILON)
    table: dict[Pair, WeylElement] = {}
    for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        table[(i, j)] = _bilinear(chi_star, PAULI_T[k], chi) * h
    for i in (1, 2, 3):
        raising = _bilinear(chi_star, _matmul2(PAULI_T[i], eps_t), chi_star)
        lowering = _bilinear(chi, _matmul2(EPSILON, PAULI_T[i]), chi)
        table[(-1, i)] = (raising - lowering) * (I * q)
        table[(0, i)] = (raising + lowering) * q
    number = _bilinear(chi_star, ((ONE, _Z), (_Z, ONE)), chi)
    table[(-1, 0)] = (number + 1) * h
    return table


def dirac_generators(presentation: str, printed: bool = False) -> DiracGenerators:
    """
    The ten so(2,3) generators of one presentation.

    Args:
        presentation: phase, holomorphic, oscillator or spinorial
        printed: Use the printed table verbatim instead of the closing forms

    Returns:
        DiracGenerators keyed by canonical index pair
    """
    if presentation == "phase":
        table = _phase_table(printed)
    elif presentation == "holomorphic":
        table = _holomorphic_table(printed)
    elif presentation == "oscillator":
        table = _oscillator_table()
    elif presentation == "spinorial":
        table = _spinorial_table()
    else:
        raise ValueError(
            f"Unknown presentation {presentation!r}; use one of {PRESENTATIONS}"
        )
    return DiracGenerators(presentation, _canonicalize(table))


# Printed entries that differ from the closing forms, by printed index order
PRINTED_DIFFERENCES = {
    "phase": [(0, 1)],
    "holomorphic": [(3, -1), (0, 3)],
}


# ----------------------------------------------------------------------
# Checks
# ----------------------------------------------------------------------


def closure_records(
    report: ClosureReport, prefix: str, symbol: str = "m"
) -> list[CheckRecord]:
    """One record per bracket of a closure report."""
    records = []
    for check in report.checks:
        left = generator_label(*check.left, symbol)
        right = generator_label(*check.right, symbol)
        rhs = " + ".join(
            f"{w}*{generator_label(*p, symbol)}" for p, w in check.expected.items()
        )
        records.append(
            make_record(
                f"{prefix}[{left},{right}]",
                f"[{left}, {right}] = -i*s*({rhs or '0'})",
                check.passed,
                residual=check.residual,
                notes={"sign": report.sign},
            )
        )
    return records


def verify_so23(
    generators: DiracGenerators, presentation: LiePresentation = SO23
) -> list[CheckRecord]:
    """All 45 brackets against the rule with one fitted global sign."""
    report = verify_closure(generators.elements, presentation, WEYL_OPS)
    logger.info(
        f"so(2,3) closure ({generators.presentation}): sign {report.sign}, "
        f"{len(report.failures)} failures"
    )
    records = closure_records(report, f"landau.so23.{generators.presentation}.")
    records.append(
        make_record(
            f"landau.so23.{generators.presentation}.sign",
            "one global sign fits all brackets",
            report.passed,
            notes={"sign": report.sign, "rule": presentation.style.value},
        )
    )
    return records


def cross_presentation_check() -> list[CheckRecord]:
    """Every generator agrees across presentations after canonical substitution."""
    phase = dirac_generators("phase")
    holo = dirac_generators("holomorphic")
    osc = dirac_generators("oscillator")
    spin = dirac_generators("spinorial")
    to_holo = phase_to_holomorphic()
    records = []
    for pair in SO23.pairs():
        label = generator_label(*pair)
        p, h, o = phase.elements[pair], holo.elements[pair], osc.elements[pair]
        records.append(
            exact_check(
                f"landau.cross.phase-holomorphic.{label}",
                f"{label}: phase form equals holomorphic form",
                substitute(p, to_holo),
                h,
            )
        )
        records.append(
            exact_check(
                f"landau.cross.holomorphic-oscillator.{label}",
                f"{label}: holomorphic form equals ladder form",
                to_oscillator(h),
                o,
            )
        )
        records.append(
            exact_check(
                f"landau.cross.phase-oscillator.{label}",
                f"{label}: phase form equals ladder form",
                to_oscillator(p),
                o,
            )
        )
        records.append(
            exact_check(
                f"landau.cross.spinorial-oscillator.{label}",
                f"{label}: spinor bilinear equals ladder form",
                spin.elements[pair],
                o,
            )
        )
    return records


def printed_table_checks() -> list[CheckRecord]:
    """Compare each printed entry with its closing form."""
    records = []
    for presentation in ("phase", "holomorphic"):
        table = (
            _phase_table if presentation == "phase" else _holomorphic_table
        )
        printed, closing = table(True), table(False)
        for key in printed:
            label = generator_label(*key)
            records.append(
                exact_check(
                    f"landau.printed.{presentation}.{label}",
                    f"printed {presentation} {label} equals the closing form",
                    printed[key],
                    closing[key],
                )
            )
    return records


def hamiltonian_identities(frame: Optional[LandauFrame] = None) -> list[CheckRecord]:
    """H/ħω = m−10 − m12, L_z/ħ = 2m12 and the ladder relations."""
    ops = build_phase_operators(frame)
    osc = build_oscillators(frame)
    g = dirac_generators("phase")
    m = g.get
    records = [
        exact_check(
            "landau.hamiltonian.h-equals-m-10-minus-m12",
            "H/hw = m-10 - m12",
            ops.H,
            m(-1, 0) - m(1, 2),
        ),
        exact_check(
            "landau.hamiltonian.lz-equals-2m12",
            "L_z/hbar = 2 m12",
            ops.L_z,
            m(1, 2) * 2,
        ),
        exact_check(
            "landau.hamiltonian.h-anticommutator",
            "H/hw = {a+, a-}/2",
            ops.H,
            anticommutator(osc.a_plus, osc.a_minus) * HALF,
        ),
        exact_check(
            "landau.hamiltonian.lz-anticommutators",
            "L_z/hbar = {b-, b+}/2 - {a-, a+}/2",
            ops.L_z,
            (
                anticommutator(osc.b_minus, osc.b_plus)
                - anticommutator(osc.a_minus, osc.a_plus)
            )
            * HALF,
        ),
        exact_check(
            "landau.hamiltonian.px-py",
            "[P_x, P_y] = i",
            commutator(ops.P_x, ops.P_y),
            PHASE.constant(I),
        ),
        exact_check(
            "landau.hamiltonian.x-y",
            "[X, Y] = -i",
            commutator(ops.X, ops.Y),
            PHASE.constant(-I),
        ),
    ]
    for name, left, right in (
        ("px-x", ops.P_x, ops.X),
        ("px-y", ops.P_x, ops.Y),
        ("py-x", ops.P_y, ops.X),
        ("py-y", ops.P_y, ops.Y),
        ("lz-h", ops.L_z, ops.H),
        ("h-b-plus", ops.H, osc.b_plus),
        ("h-b-minus", ops.H, osc.b_minus),
    ):
        records.append(
            exact_check(
                f"landau.hamiltonian.{name}",
                f"[{name}] = 0",
                commutator(left, right),
                PHASE.zero(),
            )
        )
    for name, op, target, sign in (
        ("h-a-plus", ops.H, osc.a_plus, 1),
        ("h-a-minus", ops.H, osc.a_minus, -1),
        ("lz-b-plus", ops.L_z, osc.b_plus, 1),
        ("lz-b-minus", ops.L_z, osc.b_minus, -1),
    ):
        records.append(
            exact_check(
                f"landau.hamiltonian.{name}",
                f"[{name}] = {'+' if sign > 0 else '-'}ladder",
                commutator(op, target),
                target * sign,
            )
        )
    for pair in ((1, 2), (2, 3), (1, 3)):
        label = generator_label(*pair)
        records.append(
            exact_check(
                f"landau.hamiltonian.m-10-{label}",
                f"[m-10, {label}] = 0",
                commutator(m(-1, 0), m(*pair)),
                PHASE.zero(),
            )
        )
    records.append(
        make_record(
            "landau.radial-subalgebra",
            "{m-10, m-13, m03} closes",
            closes_in_span([m(-1, 0), m(-1, 3), m(0, 3)], WEYL_OPS),
        )
    )
    records.append(
        exact_check(
            "landau.gauge.symmetric-to-landau",
            "H in symmetric gauge maps to H in Landau gauge under e^{i xi eta}",
            substitute(ops.H, symmetric_to_landau_gauge()),
            landau_gauge_hamiltonian(),
        )
    )
    return records


def oscillator_checks() -> list[CheckRecord]:
    """Ladder operators in phase variables match the abstract ones."""
    osc = build_oscillators()
    records = []
    for name, element in osc.as_dict().items():
        records.append(
            exact_check(
                f"landau.oscillators.{name}",
                f"{name} in phase variables equals the ladder generator",
                to_oscillator(element),
                OSCILLATOR.gen(name),
            )
        )
    a_minus_holo = substitute(osc.a_minus, phase_to_holomorphic())
    z, dzb = HOLOMORPHIC.gens("z", "dzb")
    records.append(
        exact_check(
            "landau.oscillators.a-minus-holomorphic",
            "a- = (z + dzb)/sqrt2",
            a_minus_holo,
            (z + dzb) * INV_SQRT2,
        )
    )
    return records


def weyl_spinor_checks() -> list[CheckRecord]:
    spinor = weyl_spinor()
    records = []
    for alpha in range(2):
        for beta in range(2):
            records.append(
                exact_check(
                    f"landau.spinor.chi{alpha + 1}-chistar{beta + 1}",
                    "[chi^a, chi*_b] = delta",
                    commutator(spinor.chi[alpha], spinor.chi_star[beta]),
                    OSCILLATOR.constant(1 if alpha == beta else 0),
                )
            )
    zb, d = HOLOMORPHIC.gens("zb", "dz")
    records.append(
        exact_check(
            "landau.spinor.chi1-holomorphic",
            "chi^1 = (zb + d)/sqrt2",
            substitute(spinor.chi[0], oscillator_to_holomorphic()),
            (zb + d) * INV_SQRT2,
        )
    )
    number = spinor.chi_star[0] * spinor.chi[0] + spinor.chi_star[1] * spinor.chi[1]
    records.append(
        exact_check(
            "landau.spinor.m-10",
            "m-10 = (chi* chi + 1)/2",
            dirac_generators("oscillator").get(-1, 0),
            (number + 1) * HALF,
        )
    )
    return records


def adjoint_type_record() -> CheckRecord:
    """Classify each generator under the phase and ladder adjoints (no assertion)."""
    notes: dict[str, Any] = {}
    for presentation in ("phase", "oscillator"):
        for label, e in dirac_generators(presentation).labelled().items():
            notes[f"{presentation}.{label}"] = adjoint_type(e)
    printed_m01 = dirac_generators("phase", printed=True).get(0, 1)
    notes["phase.printed.m01"] = adjoint_type(printed_m01)
    return make_record(
        "landau.adjoint-types", "adjoint type of each generator", True, notes=notes
    )


def fock_checks(cutoff: int, tolerance: float) -> list[CheckRecord]:
    """Numeric closure and Hermiticity of the ladder generators on the interior."""
    basis = FockBasis(2, cutoff)
    dictionary = oscillator_dictionary(OSCILLATOR, basis)
    g = dirac_generators("oscillator")
    mats = {p: realize(e, dictionary) for p, e in g.elements.items()}
    pairs = SO23.pairs()
    worst = 0.0
    for i, ab in enumerate(pairs):
        for cd in pairs[i + 1 :]:
            expected = OSCILLATOR.zero()
            for pair, weight in SO23.expected(ab, cd).items():
                expected = expected + g.elements[pair] * (-I * weight)
            lhs = mats[ab].commutator(mats[cd])
            worst = max(worst, interior_residual(lhs, realize(expected, dictionary)))
    herm = max(hermiticity_residual(m) for m in mats.values())
    return [
        numeric_check(
            "landau.fock.so23-closure",
            f"45 brackets on the Fock interior (cutoff {cutoff})",
            worst,
            tolerance,
        ),
        numeric_check(
            "landau.fock.hermiticity",
            "ladder generators are Hermitian on the interior",
            herm,
            tolerance,
        ),
    ]


@dataclass(frozen=True)
class LandauLevel:
    n: int
    value: float
    degeneracy: int
    energy_erg: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "value": self.value,
            "degeneracy": self.degeneracy,
            "energy_erg": self.energy_erg,
        }


def landau_spectrum(
    cutoff: int,
    frame: Optional[LandauFrame] = None,
    tolerance: float = 1e-8,
) -> list[LandauLevel]:
    """
    Interior eigenvalues of H/ħω on a two-mode basis.

    Returns:
        Levels n = 0 .. cutoff−2 with their numeric values and degeneracies
    """
    if cutoff < 2:
        raise ConfigError(f"Landau spectrum needs cutoff >= 2, got {cutoff}")
    frame = frame or LandauFrame()
    basis = FockBasis(2, cutoff)
    hamiltonian = to_oscillator(build_phase_operators(frame).H)
    op = realize(hamiltonian, oscillator_dictionary(OSCILLATOR, basis))
    levels = spectrum(op, hermitian=True, tolerance=tolerance)
    out = []
    for n, level in enumerate(levels[: cutoff - 1]):
        out.append(
            LandauLevel(n, level.value, level.multiplicity, frame.level_energy(n))
        )
    return out


def spectrum_checks(
    cutoff: int, tolerance_eigen: float, tolerance: float
) -> list[CheckRecord]:
    levels = landau_spectrum(cutoff, tolerance=tolerance_eigen)
    worst_value = max(abs(lv.value - (lv.n + 0.5)) for lv in levels)
    degeneracies = sorted({lv.degeneracy for lv in levels})
    basis = FockBasis(2, cutoff)
    dictionary = oscillator_dictionary(OSCILLATOR, basis)
    ops = build_phase_operators()
    h = realize(to_oscillator(ops.H), dictionary)
    lz = realize(to_oscillator(ops.L_z), dictionary)
    return [
        numeric_check(
            "landau.spectrum.levels",
            f"interior levels are n + 1/2 for n = 0..{cutoff - 2}",
            worst_value,
            tolerance_eigen,
            notes={"levels": [lv.value for lv in levels]},
        ),
        make_record(
            "landau.spectrum.degeneracy",
            f"each interior level has degeneracy {cutoff + 1}",
            degeneracies == [cutoff + 1],
            notes={"degeneracies": degeneracies},
        ),
        numeric_check(
            "landau.spectrum.h-lz",
            "[H, L_z] vanishes on the interior",
            interior_residual(h.commutator(lz), basis.identity().scale(0)),
            tolerance,
        ),
    ]


def run_checks(settings: SuiteConfig) -> list[CheckRecord]:
    """Full Landau suite."""
    records: list[CheckRecord] = []
    for presentation in PRESENTATIONS:
        records.extend(verify_so23(dirac_generators(presentation)))
    records.extend(cross_presentation_check())
    records.extend(printed_table_checks())
    records.extend(oscillator_checks())
    records.extend(hamiltonian_identities())
    records.extend(weyl_spinor_checks())
    records.append(adjoint_type_record())
    records.extend(fock_checks(settings.fock_cutoff_2mode, settings.tolerance_numeric))
    records.extend(
        spectrum_checks(
            settings.fock_cutoff_2mode,
            settings.tolerance_eigen,
            settings.tolerance_numeric,
        )
    )
    return records
