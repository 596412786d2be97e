"""
Dynamical so(2,4) of the three-dimensional hydrogen atom.

Generators are radial Weyl elements in x1, x2, x3 with p = −i∂ and r = |x|.
Products follow the printed operator order (position factors on the left);
the symmetrized order is only tried when the printed one fails to close.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, Optional

from .check_record import CheckRecord, exact_check, make_record
from .landau import SO23, closure_records, dirac_generators
from .lie import (
    WEYL_OPS,
    ClosureReport,
    ElementOps,
    LiePresentation,
    Pair,
    RuleStyle,
    closes_in_span,
    structure_constants,
    verify_closure,
)
from .scalar import HALF, I
from .weyl import AlgebraSignature, WeylElement, commutator

if TYPE_CHECKING:
    from ..verify_config import SuiteConfig

logger = logging.getLogger(__name__)

RADIAL = AlgebraSignature(
    "hydrogen",
    ("x1", "x2", "x3"),
    ("d1", "d2", "d3"),
    radial_dim=3,
    adjoint_kind="none",
)

SO24 = LiePresentation(
    "so(2,4)", (-1, 0, 1, 2, 3, 5), (1, 1, -1, -1, -1, -1), RuleStyle.CONF_PLUS
)
PLANAR = LiePresentation(
    "so(2,3)", (-1, 0, 1, 2, 5), (1, 1, -1, -1, -1), RuleStyle.CONF_PLUS
)
RADIAL_SO12 = LiePresentation("so(2,1)", (-1, 0, 5), (1, 1, -1), RuleStyle.CONF_PLUS)

# hydrogen index → Landau index for the planar comparison
LANDAU_RELABEL = {-1: -1, 0: 0, 1: 1, 2: 2, 5: 3}

DENOMINATOR_BOUND = 3


class Ordering(str, Enum):
    """Operator order for the products r·p and x·p², p·(x·p)."""

    PRINTED = "printed"
    SYMMETRIZED = "symmetrized"


@dataclass(frozen=True)
class HydrogenGenerators:
    """L, Γ, D, A0, B0, A_i, B_i as radial elements."""

    L: tuple[WeylElement, WeylElement, WeylElement]  # noqa: N815
    gamma: tuple[WeylElement, WeylElement, WeylElement]
    D: WeylElement  # noqa: N815
    A0: WeylElement  # noqa: N815
    B0: WeylElement  # noqa: N815
    A: tuple[WeylElement, WeylElement, WeylElement]  # noqa: N815
    B: tuple[WeylElement, WeylElement, WeylElement]  # noqa: N815
    ordering: Ordering = Ordering.PRINTED

    def as_dict(self) -> dict[str, WeylElement]:
        out = {"D": self.D, "A0": self.A0, "B0": self.B0}
        for k in range(3):
            out[f"L{k + 1}"] = self.L[k]
            out[f"Gamma{k + 1}"] = self.gamma[k]
            out[f"A{k + 1}"] = self.A[k]
            out[f"B{k + 1}"] = self.B[k]
        return out

    def to_json(self) -> dict[str, Any]:
        return {
            "ordering": self.ordering.value,
            "generators": {k: v.to_json() for k, v in self.as_dict().items()},
        }


def _sym(a: WeylElement, b: WeylElement) -> WeylElement:
    return (a * b + b * a).scale(HALF)


def build_hydrogen_generators(
    ordering: Ordering = Ordering.PRINTED,
) -> HydrogenGenerators:
    """
    Build the generators.

    L = x×p, Γ_i = r p_i, D = x·p − i, B0 ± A0 = r p² and r,
    B_i ± A_i = x_i p² − 2 p_i (x·p) and x_i.
    """
    x = RADIAL.gens("x1", "x2", "x3")
    p = tuple(d.scale(-I) for d in RADIAL.gens("d1", "d2", "d3"))
    r = RADIAL.radius()
    p2 = sum((pk * pk for pk in p), RADIAL.zero())
    xp = sum((xk * pk for xk, pk in zip(x, p)), RADIAL.zero())
    product = (lambda a, b: a * b) if ordering is Ordering.PRINTED else _sym

    angular = (
        x[1] * p[2] - x[2] * p[1],
        x[2] * p[0] - x[0] * p[2],
        x[0] * p[1] - x[1] * p[0],
    )
    gamma = tuple(product(r, pk) for pk in p)
    dilation = xp - RADIAL.constant(I)
    rp2 = product(r, p2)
    b0 = (rp2 + r).scale(HALF)
    a0 = (rp2 - r).scale(HALF)
    core = tuple(product(x[k], p2) - product(p[k], xp).scale(2) for k in range(3))
    b = tuple((core[k] + x[k]).scale(HALF) for k in range(3))
    a = tuple((core[k] - x[k]).scale(HALF) for k in range(3))
    return HydrogenGenerators(
        angular, gamma, dilation, a0, b0, a, b, ordering  # type: ignore[arg-type]
    )


def map_to_LAB(h: HydrogenGenerators) -> dict[Pair, WeylElement]:  # noqa: N802
    """
    Antisymmetric L_AB table over the indices −1, 0, 1, 2, 3, 5.

    B0 = L_{−1,0}, B_i = L_{−1,i}, D = L_{−1,5}, Γ_i = L_{0,i}, A0 = L_{0,5},
    L3 = L_12, −L2 = L_13, L1 = L_23, A_i = L_{i,5}.
    """
    table: dict[Pair, WeylElement] = {
        (-1, 0): h.B0,
        (-1, 5): h.D,
        (0, 5): h.A0,
        (1, 2): h.L[2],
        (1, 3): -h.L[1],
        (2, 3): h.L[0],
    }
    for i in (1, 2, 3):
        table[(-1, i)] = h.B[i - 1]
        table[(0, i)] = h.gamma[i - 1]
        table[(i, 5)] = h.A[i - 1]
    return table


def lab_entry(table: dict[Pair, WeylElement], a: int, b: int) -> WeylElement:
    """L_ab for any ordered pair, using antisymmetry."""
    pair, sign = SO24.canonical(a, b)
    if pair is None:
        return RADIAL.zero()
    return table[pair] if sign > 0 else -table[pair]


class _DenominatorTracker:
    """Bracket wrapper recording the largest (x²)⁻ᵐ power produced."""

    def __init__(self) -> None:
        self.max_power = 0

    def bracket(self, a: WeylElement, b: WeylElement) -> WeylElement:
        result = commutator(a, b)
        self.max_power = max(self.max_power, result.max_denominator_power())
        return result

    def ops(self) -> ElementOps[WeylElement]:
        return ElementOps(self.bracket, WEYL_OPS.coordinates, WEYL_OPS.render)


@dataclass
class HydrogenClosure:
    ordering: Ordering
    report: ClosureReport
    max_denominator_power: int
    tried: tuple[Ordering, ...]


def verify_so24_hydrogen(
    ordering: Optional[Ordering] = None,
) -> HydrogenClosure:
    """
    All 105 brackets of the L_AB against the conf+ rule with a fitted sign.

    Without an explicit ordering the printed order is tried first and the
    symmetrized order only when it fails.
    """
    candidates = [ordering] if ordering else [Ordering.PRINTED, Ordering.SYMMETRIZED]
    tried: list[Ordering] = []
    result: Optional[HydrogenClosure] = None
    for candidate in candidates:
        tried.append(candidate)
        tracker = _DenominatorTracker()
        table = map_to_LAB(build_hydrogen_generators(candidate))
        report = verify_closure(table, SO24, tracker.ops())
        result = HydrogenClosure(candidate, report, tracker.max_power, tuple(tried))
        logger.info(
            f"Hydrogen so(2,4) with {candidate.value} ordering: sign {report.sign}, "
            f"{len(report.failures)} failures"
        )
        if report.passed:
            break
    assert result is not None
    return result


def so24_records(closure: HydrogenClosure) -> list[CheckRecord]:
    records = closure_records(closure.report, "hydrogen.so24.", "L")
    notes = {
        "sign": closure.report.sign,
        "ordering": closure.ordering.value,
        "tried": [o.value for o in closure.tried],
    }
    records.append(
        make_record(
            "hydrogen.so24.sign",
            "one global sign fits all 105 brackets",
            closure.report.passed,
            notes=notes,
        )
    )
    records.append(
        make_record(
            "hydrogen.denominator-bound",
            f"no bracket carries (x2)^-m with m > {DENOMINATOR_BOUND}",
            closure.max_denominator_power <= DENOMINATOR_BOUND,
            residual=float(closure.max_denominator_power),
            notes={"max_power": closure.max_denominator_power},
        )
    )
    return records


def generator_records(h: HydrogenGenerators) -> list[CheckRecord]:
    """Defining identities of the generators."""
    x = RADIAL.gens("x1", "x2", "x3")
    d = RADIAL.gens("d1", "d2", "d3")
    r = RADIAL.radius()
    p2 = sum((dk * dk for dk in d), RADIAL.zero()).scale(-1)
    xp = sum((xk * dk for xk, dk in zip(x, d)), RADIAL.zero()).scale(-I)
    return [
        exact_check(
            "hydrogen.generators.d", "D = x.p - i", h.D, xp - RADIAL.constant(I)
        ),
        exact_check("hydrogen.generators.b0-minus-a0", "B0 - A0 = r", h.B0 - h.A0, r),
        exact_check(
            "hydrogen.generators.b0-plus-a0", "B0 + A0 = r p^2", h.B0 + h.A0, r * p2
        ),
    ]


@dataclass
class RadialReport:
    closes: bool
    closure: ClosureReport
    candidates: dict[str, WeylElement]


def radial_so12(h: Optional[HydrogenGenerators] = None) -> RadialReport:
    """{A0, D, B0} and the conformal-Hamiltonian candidates."""
    h = h or build_hydrogen_generators()
    closure = verify_closure(
        {(-1, 0): h.B0, (-1, 5): h.D, (0, 5): h.A0}, RADIAL_SO12, WEYL_OPS
    )
    r = RADIAL.radius()
    rp2 = h.B0 + h.A0
    candidates = {
        "B0": (rp2 + r).scale(HALF),
        "A0": (rp2 - r).scale(HALF),
        "A0+B0": rp2,
    }
    return RadialReport(
        closes_in_span([h.A0, h.D, h.B0], WEYL_OPS), closure, candidates
    )


def radial_records(h: HydrogenGenerators) -> list[CheckRecord]:
    report = radial_so12(h)
    c = report.candidates
    return [
        make_record(
            "hydrogen.radial.closure",
            "A0, D, B0 close as a 3-dimensional algebra",
            report.closes and report.closure.passed,
            residual=report.closure.max_residual,
            notes={"sign": report.closure.sign},
        ),
        exact_check("hydrogen.radial.b0", "B0 = r(p^2 + 1)/2", h.B0, c["B0"]),
        exact_check("hydrogen.radial.a0", "A0 = r(p^2 - 1)/2", h.A0, c["A0"]),
        exact_check(
            "hydrogen.radial.sum",
            "(B0 - A0) + (B0 + A0) = 2 B0",
            (h.B0 - h.A0) + c["A0+B0"],
            h.B0.scale(2),
        ),
        exact_check(
            "hydrogen.radial.d-r",
            "[D, B0 - A0] = -i r",
            commutator(h.D, h.B0 - h.A0),
            RADIAL.radius().scale(-I),
        ),
    ]


@dataclass
class PlanarReduction:
    generators: dict[Pair, WeylElement]
    closure: ClosureReport

    @property
    def labels(self) -> list[str]:
        return [f"L{a}{b}" for a, b in self.generators]


def reduce_to_2d(ordering: Ordering = Ordering.PRINTED) -> PlanarReduction:
    """The ten L_AB free of index 3, checked against so(2,3)."""
    table = map_to_LAB(build_hydrogen_generators(ordering))
    planar = {pair: table[pair] for pair in PLANAR.pairs()}
    return PlanarReduction(planar, verify_closure(planar, PLANAR, WEYL_OPS))


def landau_comparison(reduction: PlanarReduction) -> CheckRecord:
    """
    Structure constants of the planar set against the Landau m_ab.

    m_ab corresponds to L_{π(b)π(a)} with π relabelling the Landau index 3 as 5.
    """
    inverse = {v: k for k, v in LANDAU_RELABEL.items()}
    table = reduction.generators
    landau = dirac_generators("oscillator")
    ours, theirs, labels = [], [], []
    for a, b in SO23.pairs():
        pair, sign = PLANAR.canonical(inverse[b], inverse[a])
        assert pair is not None
        ours.append(table[pair] if sign > 0 else -table[pair])
        theirs.append(landau.get(a, b))
        labels.append(f"m{a}{b}")
    try:
        same = structure_constants(ours, labels, WEYL_OPS).same_as(
            structure_constants(theirs, labels, WEYL_OPS)
        )
    except ValueError as e:
        logger.warning(f"Planar comparison failed: {e}")
        same = False
    return make_record(
        "hydrogen.planar.landau-structure-constants",
        "transposed planar L_AB have the structure constants of the Landau m_ab",
        same,
        notes={"relabel": {str(k): v for k, v in LANDAU_RELABEL.items()}},
    )


def planar_records(ordering: Ordering) -> list[CheckRecord]:
    reduction = reduce_to_2d(ordering)
    return [
        make_record(
            "hydrogen.planar.closure",
            "the ten generators free of index 3 close as so(2,3)",
            reduction.closure.passed,
            residual=reduction.closure.max_residual,
            notes={"sign": reduction.closure.sign, "generators": reduction.labels},
        ),
        landau_comparison(reduction),
    ]


def generator_table_json(ordering: Ordering = Ordering.PRINTED) -> dict[str, Any]:
    table = map_to_LAB(build_hydrogen_generators(ordering))
    return {f"L{a},{b}": e.to_json() for (a, b), e in table.items()}


def run_checks(settings: SuiteConfig) -> list[CheckRecord]:
    """Full hydrogen suite."""
    closure = verify_so24_hydrogen()
    h = build_hydrogen_generators(closure.ordering)
    records = generator_records(h)
    records.extend(so24_records(closure))
    records.extend(radial_records(h))
    records.extend(planar_records(closure.ordering))
    return records
