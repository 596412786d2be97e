"""
Dirac spinor layer.

Gamma matrices in the Dirac representation, the fifteen su(2,2) generators
σ^{AB}, their ladder realization J^{AB} = ψ̄σ^{AB}ψ on four modes, the linear
Casimir, and the Majorana reduction onto the two Landau oscillators.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import TYPE_CHECKING, Any, Optional

import numpy as np
import sympy

from .check_record import (
    CheckRecord,
    exact_check,
    exact_family_check,
    make_record,
    numeric_check,
)
from .errors import VerificationError
from .fock import (
    FockBasis,
    interior_residual,
    oscillator_dictionary,
    realize,
    spectrum,
)
from .landau import OSCILLATOR, dirac_generators, weyl_spinor
from .lie import (
    MATRIX_OPS,
    WEYL_OPS,
    ClosureReport,
    LiePresentation,
    Pair,
    RuleStyle,
    match_generators,
    rank,
    structure_constants,
    verify_closure,
)
from .scalar import HALF, Scalar
from .weyl import AlgebraSignature, WeylElement, act_on_function, commutator

if TYPE_CHECKING:
    from ..verify_config import SuiteConfig

logger = logging.getLogger(__name__)

SU22 = LiePresentation(
    "su(2,2)", (-1, 0, 1, 2, 3, 5), (1, 1, -1, -1, -1, -1), RuleStyle.CONF_PLUS
)
SO23_SPINOR = LiePresentation(
    "so(2,3)", (-1, 0, 1, 2, 3), (1, 1, -1, -1, -1), RuleStyle.CONF_PLUS
)
MINKOWSKI = (1, -1, -1, -1)

DIRAC4 = AlgebraSignature(
    "dirac4",
    ("z1", "z2", "zb1", "zb2"),
    ("d1", "d2", "db1", "db2"),
    adjoint_kind="none",
)

# Landau index of the m generator paired with J^{ab} (as m_{π(b)π(a)})
MAJORANA_PERMUTATION = {-1: 0, 0: -1, 1: 1, 2: 2, 3: 3}
MAJORANA_SIGNS = {-1: 1, 0: -1, 1: 1, 2: -1, 3: 1}

# ψ̄ = ψᵀC for the Majorana spinor; C is antisymmetric with C² = −1
MAJORANA_CONJUGATION = sympy.Matrix(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]
)

HOMOMORPHISM_SAMPLES = 8


class CliffordError(VerificationError):
    """Gamma matrices violate the Clifford relations."""


PAULI = (
    sympy.Matrix([[0, 1], [1, 0]]),
    sympy.Matrix([[0, -sympy.I], [sympy.I, 0]]),
    sympy.Matrix([[1, 0], [0, -1]]),
)
EPSILON = sympy.Matrix([[0, 1], [-1, 0]])


def _block(
    a: sympy.Matrix, b: sympy.Matrix, c: sympy.Matrix, d: sympy.Matrix
) -> sympy.Matrix:
    return sympy.Matrix(sympy.BlockMatrix([[a, b], [c, d]]))


@dataclass(frozen=True)
class GammaBasis:
    """γ⁰..γ³ with γ⁵ = γ⁰γ¹γ²γ³, β = γ⁰ and C = iγ⁰γ²."""

    gammas: tuple[sympy.Matrix, ...]
    gamma5: sympy.Matrix
    beta: sympy.Matrix
    charge_conjugation: sympy.Matrix

    def anticommutator(self, mu: int, nu: int) -> sympy.Matrix:
        g = self.gammas
        return (g[mu] * g[nu] + g[nu] * g[mu]).applyfunc(sympy.expand)


@lru_cache(maxsize=1)
def build_gamma() -> GammaBasis:
    """
    Dirac representation.

    Raises:
        CliffordError: if {γ^μ, γ^ν} ≠ 2η^{μν}
    """
    one, zero = sympy.eye(2), sympy.zeros(2, 2)
    gammas = (_block(one, zero, zero, -one),) + tuple(
        _block(zero, s, -s, zero) for s in PAULI
    )
    gamma5 = gammas[0] * gammas[1] * gammas[2] * gammas[3]
    basis = GammaBasis(
        gammas,
        gamma5,
        gammas[0],
        (sympy.I * gammas[0] * gammas[2]).applyfunc(sympy.expand),
    )
    for mu in range(4):
        for nu in range(4):
            expected = sympy.eye(4) * (2 * MINKOWSKI[mu] if mu == nu else 0)
            if basis.anticommutator(mu, nu) != expected:
                raise CliffordError(f"{{gamma{mu}, gamma{nu}}} != 2 eta")
    return basis


def _gamma_index(gamma: GammaBasis, a: int) -> sympy.Matrix:
    return gamma.gamma5 if a == 5 else gamma.gammas[a]


@lru_cache(maxsize=1)
def build_sigma() -> dict[Pair, sympy.Matrix]:
    """
    σ^{μν} = (i/4)[γ^μ, γ^ν], σ^{μ5} = (i/4)[γ^μ, γ⁵], σ^{−1,5} = −½γ⁵ and
    σ^{−1,μ} = −½γ^μ on the canonical pairs of −1, 0, 1, 2, 3, 5.
    """
    gamma = build_gamma()
    quarter_i = sympy.I / 4
    out: dict[Pair, sympy.Matrix] = {}
    for a, b in SU22.pairs():
        if a == -1:
            m = -_gamma_index(gamma, b) / 2
        else:
            ga, gb = _gamma_index(gamma, a), _gamma_index(gamma, b)
            m = quarter_i * (ga * gb - gb * ga)
        out[(a, b)] = m.applyfunc(sympy.expand)
    return out


def sigma_json() -> dict[str, Any]:
    return {
        f"sigma{a},{b}": [[str(v) for v in m.row(i)] for i in range(m.rows)]
        for (a, b), m in build_sigma().items()
    }


def gamma_records() -> list[CheckRecord]:
    gamma = build_gamma()
    eps_block = _block(sympy.zeros(2, 2), EPSILON, EPSILON, sympy.zeros(2, 2))
    anti5 = all(
        (gamma.gamma5 * g + g * gamma.gamma5).is_zero_matrix for g in gamma.gammas
    )
    return [
        make_record("spinor.gamma.clifford", "{g^mu, g^nu} = 2 eta^{mu nu}", True),
        make_record(
            "spinor.gamma.charge-conjugation",
            "C = i g0 g2 has off-diagonal epsilon blocks",
            gamma.charge_conjugation == eps_block,
        ),
        make_record(
            "spinor.gamma.beta-hermitian",
            "beta = g0 is Hermitian",
            gamma.beta == gamma.beta.H,
        ),
        make_record(
            "spinor.gamma.gamma5",
            "g5^2 = -1 and g5 anticommutes with every g^mu",
            (gamma.gamma5 * gamma.gamma5) == -sympy.eye(4) and anti5,
        ),
    ]


def sigma_records() -> list[CheckRecord]:
    sigma = build_sigma()
    beta = build_gamma().beta
    report = verify_closure(sigma, SU22, MATRIX_OPS)
    pseudo = [
        p
        for p, m in sigma.items()
        if not (beta * m * beta.inv() - m.H).applyfunc(sympy.expand).is_zero_matrix
    ]
    return [
        make_record(
            "spinor.sigma.closure",
            "sigma^{AB} satisfy the conf+ rule",
            report.passed,
            residual=report.max_residual,
            notes={"sign": report.sign, "brackets": len(report.checks)},
        ),
        make_record(
            "spinor.sigma.pseudo-hermitian",
            "beta sigma beta^-1 = sigma^dagger for all 15",
            not pseudo,
            notes={"failures": [list(p) for p in pseudo]},
        ),
    ]


# ----------------------------------------------------------------------
# Bilinears
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class SpinorBilinear:
    """ψ and ψ̄ with [ψ^α, ψ̄_β] = δ^α_β checked on construction."""

    psi: tuple[WeylElement, ...]
    psi_bar: tuple[WeylElement, ...]
    context: str

    def __post_init__(self) -> None:
        bad = [
            (a, b)
            for a in range(4)
            for b in range(4)
            if commutator(self.psi[a], self.psi_bar[b]) != int(a == b)
        ]
        if bad:
            raise VerificationError(
                f"{self.context}: [psi, psi_bar] != delta at {bad}"
            )

    @property
    def signature(self) -> AlgebraSignature:
        return self.psi[0].signature

    def bilinear(self, matrix: sympy.Matrix) -> WeylElement:
        """ψ̄ A ψ."""
        total = self.signature.zero()
        for a in range(4):
            for b in range(4):
                entry = sympy.expand(matrix[a, b])
                if entry != 0:
                    coeff = Scalar.from_sympy(entry)
                    total = total + (self.psi_bar[a] * self.psi[b]).scale(coeff)
        return total

    @cached_property
    def _generator_table(self) -> dict[Pair, WeylElement]:
        return {p: self.bilinear(m) for p, m in build_sigma().items()}

    def generators(self) -> dict[Pair, WeylElement]:
        return dict(self._generator_table)


@lru_cache(maxsize=1)
def dirac_spinor() -> SpinorBilinear:
    """ψ = (z̄¹, z̄², ∂₁, ∂₂), ψ̄ = (−∂̄₁, −∂̄₂, z¹, z²)."""
    z1, z2, zb1, zb2 = DIRAC4.gens("z1", "z2", "zb1", "zb2")
    d1, d2, db1, db2 = DIRAC4.gens("d1", "d2", "db1", "db2")
    return SpinorBilinear((zb1, zb2, d1, d2), (-db1, -db2, z1, z2), "dirac-4-mode")


@lru_cache(maxsize=1)
def majorana_spinor() -> SpinorBilinear:
    """ψ = (χ, εᵀχ*ᵀ) and ψ̄ = (χ*, −χᵀε) for χ = (b⁻, a⁻)."""
    spinor = weyl_spinor()
    chi, chi_star = spinor.chi, spinor.chi_star
    lower = (-chi_star[1], chi_star[0])
    bar_lower = (chi[1], -chi[0])
    return SpinorBilinear(chi + lower, chi_star + bar_lower, "majorana-2-mode")


def ladder_representation() -> dict[Pair, WeylElement]:
    """J^{AB} = ψ̄σ^{AB}ψ on four modes."""
    return dirac_spinor().generators()


def ladder_records(seed: int) -> list[CheckRecord]:
    spinor = dirac_spinor()
    gens = spinor.generators()
    report = verify_closure(gens, SU22, WEYL_OPS)
    zero = DIRAC4.zero()
    ccr = [
        (commutator(spinor.psi[a], spinor.psi[b]), zero)
        for a in range(4)
        for b in range(4)
    ] + [
        (commutator(spinor.psi_bar[a], spinor.psi_bar[b]), zero)
        for a in range(4)
        for b in range(4)
    ]

    rng = np.random.default_rng(seed)
    homomorphism = []
    for _ in range(HOMOMORPHISM_SAMPLES):
        a = sympy.Matrix(rng.integers(-3, 4, size=(4, 4)).tolist())
        b = sympy.Matrix(rng.integers(-3, 4, size=(4, 4)).tolist())
        homomorphism.append(
            (
                commutator(spinor.bilinear(a), spinor.bilinear(b)),
                spinor.bilinear(a * b - b * a),
            )
        )

    pairs = SU22.pairs()
    labels = [f"J{a},{b}" for a, b in pairs]
    same = structure_constants([gens[p] for p in pairs], labels, WEYL_OPS).same_as(
        structure_constants([build_sigma()[p] for p in pairs], labels, MATRIX_OPS)
    )
    return [
        make_record(
            "spinor.ladder.ccr",
            "[psi^a, psi_bar_b] = delta and the components commute among themselves",
            all(lhs == rhs for lhs, rhs in ccr),
        ),
        make_record(
            "spinor.ladder.closure",
            "J^{AB} satisfy the conf+ rule",
            report.passed,
            residual=report.max_residual,
            notes={"sign": report.sign, "brackets": len(report.checks)},
        ),
        exact_family_check(
            "spinor.ladder.homomorphism",
            "[psi_bar A psi, psi_bar B psi] = psi_bar [A, B] psi",
            homomorphism,
        ),
        make_record(
            "spinor.ladder.structure-constants",
            "sigma^{AB} and J^{AB} have identical structure constants",
            same,
        ),
    ]


# ----------------------------------------------------------------------
# Casimir and helicity
# ----------------------------------------------------------------------


def euler_difference() -> WeylElement:
    """z^α∂_α − z̄^α∂̄_α."""
    z1, z2, zb1, zb2, d1, d2, db1, db2 = DIRAC4.gens(*DIRAC4.generator_names)
    return z1 * d1 + z2 * d2 - zb1 * db1 - zb2 * db2


def helicity_operator() -> WeylElement:
    """λ = −(C₁ + 2)/2."""
    return euler_difference().scale(-HALF)


def helicity(state: WeylElement) -> Optional[Scalar]:
    """λ-eigenvalue of a monomial state, or None if it is not an eigenstate."""
    image = act_on_function(helicity_operator(), state)
    keys = list(state.terms)
    if state.is_zero():
        return None
    key = keys[0]
    value = image.terms.get(key, Scalar(0)) / state.terms[key]
    return value if image == state.scale(value) else None


@dataclass
class CasimirReport:
    casimir: WeylElement
    identity_holds: bool
    central: dict[Pair, bool]
    helicities: dict[str, Optional[Scalar]]


def casimir_helicity() -> CasimirReport:
    spinor = dirac_spinor()
    casimir = spinor.bilinear(sympy.eye(4))
    gens = spinor.generators()
    states = {
        "1": DIRAC4.one(),
        "z1": DIRAC4.gen("z1"),
        "zb2": DIRAC4.gen("zb2"),
        "z1*zb1": DIRAC4.gen("z1") * DIRAC4.gen("zb1"),
        "z1*z2": DIRAC4.gen("z1") * DIRAC4.gen("z2"),
    }
    return CasimirReport(
        casimir,
        casimir + 2 == euler_difference(),
        {p: commutator(casimir, g).is_zero() for p, g in gens.items()},
        {label: helicity(s) for label, s in states.items()},
    )


def casimir_records(cutoff: int, tolerance: float) -> list[CheckRecord]:
    report = casimir_helicity()
    expected = {
        "1": Scalar(0),
        "z1": -HALF,
        "zb2": HALF,
        "z1*zb1": Scalar(0),
        "z1*z2": Scalar(-1),
    }
    records = [
        make_record(
            "spinor.casimir.identity",
            "C1 + 2 = z d - zb db",
            report.identity_holds,
            lhs=report.casimir.to_text(),
        ),
        make_record(
            "spinor.casimir.center",
            "[C1, J^{AB}] = 0 for all 15",
            all(report.central.values()),
            notes={"failures": [list(p) for p, ok in report.central.items() if not ok]},
        ),
        make_record(
            "spinor.casimir.helicity",
            "lambda on monomial states",
            report.helicities == expected,
            notes={k: str(v) for k, v in report.helicities.items()},
        ),
    ]

    basis = FockBasis(4, cutoff)
    dictionary = oscillator_dictionary(DIRAC4, basis)
    lam = realize(helicity_operator(), dictionary)
    levels = spectrum(lam, tolerance=tolerance, rows=basis.interior())
    half_integers = all(
        abs(2 * lv.value - round(2 * lv.value)) <= tolerance for lv in levels
    )
    vacuum = lam.element((0, 0, 0, 0), (0, 0, 0, 0))
    j = realize(ladder_representation()[(-1, 0)], dictionary)
    c1 = realize(report.casimir, dictionary)
    records.append(
        make_record(
            "spinor.casimir.fock-helicity",
            "lambda has half-integer eigenvalues and vanishes on the vacuum",
            half_integers and abs(vacuum) <= tolerance,
            notes={"levels": [lv.to_dict() for lv in levels[:9]], "cutoff": cutoff},
        )
    )
    records.append(
        numeric_check(
            "spinor.casimir.fock-center",
            "[C1, J^{-1,0}] vanishes on the Fock interior",
            interior_residual(c1.commutator(j), basis.identity().scale(0)),
            tolerance,
        )
    )
    return records


# ----------------------------------------------------------------------
# Majorana reduction
# ----------------------------------------------------------------------


@dataclass
class MajoranaReport:
    generators: dict[Pair, WeylElement]
    vanishing: list[Pair]
    survivors: dict[Pair, WeylElement]
    span_rank: int
    closure: Optional[ClosureReport]
    correspondence: Optional[dict[str, tuple[str, Scalar]]]


def majorana_reduce() -> MajoranaReport:
    """J^{AB} with ψ built from the Landau Weyl spinor."""
    gens = majorana_spinor().generators()
    vanishing = [p for p, e in gens.items() if e.is_zero()]
    survivors = {p: e for p, e in gens.items() if not e.is_zero()}
    span = rank([WEYL_OPS.coordinates(e) for e in survivors.values()])
    halved = {p: e.scale(HALF) for p, e in survivors.items()}
    closure = None
    if set(halved) == set(SO23_SPINOR.pairs()):
        closure = verify_closure(halved, SO23_SPINOR, WEYL_OPS)
    landau = dirac_generators("oscillator")
    correspondence = match_generators(
        {f"J{a},{b}": e for (a, b), e in survivors.items()},
        landau.labelled(),
        WEYL_OPS,
    )
    logger.info(
        f"Majorana reduction: {len(vanishing)} vanishing, rank {span}, "
        f"closure {closure.passed if closure else None}"
    )
    return MajoranaReport(gens, vanishing, survivors, span, closure, correspondence)


def expected_partner(a: int, b: int) -> tuple[str, Scalar]:
    """Landau label and constant with J^{ab} = c·m_{π(b)π(a)}."""
    pa, pb = MAJORANA_PERMUTATION[a], MAJORANA_PERMUTATION[b]
    sign = MAJORANA_SIGNS[a] * MAJORANA_SIGNS[b]
    pair, orient = SO23_SPINOR.canonical(pb, pa)
    assert pair is not None
    return f"m{pair[0]}{pair[1]}", Scalar(2 * sign * orient)


def majorana_pairing() -> dict[tuple[int, int], int]:
    """[ψ^a, ψ^b] = (C⁻¹)_{ab} = −C_{ab}, zero-based indices."""
    return {
        (a, b): -int(MAJORANA_CONJUGATION[a, b]) for a in range(4) for b in range(4)
    }


def psi_transpose_c(spinor: SpinorBilinear, b: int) -> WeylElement:
    """(ψᵀC)_b."""
    total = spinor.signature.zero()
    for c in range(4):
        entry = int(MAJORANA_CONJUGATION[c, b])
        if entry:
            total = total + spinor.psi[c].scale(entry)
    return total


def majorana_records() -> list[CheckRecord]:
    report = majorana_reduce()
    spinor = majorana_spinor()
    pairing = [
        (commutator(spinor.psi[a], spinor.psi[b]), OSCILLATOR.constant(k))
        for (a, b), k in majorana_pairing().items()
    ]
    conjugate = [(spinor.psi_bar[b], psi_transpose_c(spinor, b)) for b in range(4)]
    expected_vanishing = sorted(p for p in SU22.pairs() if 5 in p)
    matches = report.correspondence or {}
    fitted = {k: (t, str(c)) for k, (t, c) in matches.items()}
    predicted_ok = bool(matches) and all(
        matches.get(f"J{a},{b}") == expected_partner(a, b) for a, b in report.survivors
    )
    return [
        exact_check(
            "spinor.majorana.psi3-psibar3",
            "[psi^3, psi_bar_3] = [-a+, a-] = 1",
            commutator(spinor.psi[2], spinor.psi_bar[2]),
            OSCILLATOR.one(),
        ),
        exact_family_check(
            "spinor.majorana.psi-pairing",
            "[psi^1, psi^4] = [psi^3, psi^2] = 1, reversed -1, all others 0",
            pairing,
        ),
        exact_family_check(
            "spinor.majorana.conjugation",
            "psi_bar = psi^T C",
            conjugate,
        ),
        make_record(
            "spinor.majorana.vanishing",
            "J^{-1,5}, J^{0,5} and J^{i,5} vanish",
            sorted(report.vanishing) == expected_vanishing,
            notes={"vanishing": [list(p) for p in report.vanishing]},
        ),
        make_record(
            "spinor.majorana.rank",
            "surviving generators span 10 dimensions",
            report.span_rank == 10,
            notes={"rank": report.span_rank, "alias": "3=5"},
        ),
        make_record(
            "spinor.majorana.closure",
            "J/2 on the survivors satisfies the conf+ rule of so(2,3)",
            report.closure is not None and report.closure.passed,
            residual=report.closure.max_residual if report.closure else 0.0,
            notes={"sign": report.closure.sign if report.closure else None},
        ),
        make_record(
            "spinor.majorana.landau-correspondence",
            "J^{ab} = 2 s_a s_b m_{pi(b)pi(a)} with pi swapping -1 and 0",
            predicted_ok,
            notes={"fitted": fitted},
        ),
    ]


def run_checks(settings: SuiteConfig) -> list[CheckRecord]:
    """Full spinor suite."""
    records = gamma_records()
    records.extend(sigma_records())
    records.extend(ladder_records(settings.seed))
    records.extend(
        casimir_records(settings.fock_cutoff_4mode, settings.tolerance_eigen)
    )
    records.extend(majorana_records())
    return records
