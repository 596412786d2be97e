"""
Kustaanheimo-Stiefel and Levi-Civita phase-space transforms.

The 4D oscillator phase space (u, w) maps onto the 3D Kepler phase space
(x, p) and, after setting u2 = u4 = w2 = w4 = 0, the 2D oscillator (u1, u3)
onto the planar Kepler problem (ξ, η). Coordinates are exact rationals;
Poisson brackets are taken symbolically in (u, w) and evaluated at sample
points.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import TYPE_CHECKING, Any, Optional, Sequence, Union

import numpy as np
import sympy

from .check_record import CheckRecord, make_record
from .errors import PhaseSpaceError

if TYPE_CHECKING:
    from ..verify_config import SuiteConfig

logger = logging.getLogger(__name__)

PAPER_LITERAL = "paper-literal"
HOPF_NORMALIZED = "hopf-normalized"
KS_MODES = (HOPF_NORMALIZED, PAPER_LITERAL)

AS_PRINTED = "as-printed"
CANONICAL = "canonical"

SAMPLE_RANGE = 5

U = sympy.symbols("u1:5")
W = sympy.symbols("w1:5")

Rational = Union[int, Fraction]


def _fractions(values: Sequence[Any], length: int, name: str) -> tuple[Fraction, ...]:
    if len(values) != length:
        raise PhaseSpaceError(f"{name} needs {length} components, got {len(values)}")
    return tuple(Fraction(v) for v in values)


def _text(values: Sequence[Fraction]) -> list[str]:
    return [str(v) for v in values]


@dataclass(frozen=True)
class PhasePoint4:
    """Point (u, w) of the 4D oscillator phase space with the zero section deleted."""

    u: tuple[Fraction, ...]
    w: tuple[Fraction, ...] = (Fraction(0),) * 4

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", _fractions(self.u, 4, "u"))
        object.__setattr__(self, "w", _fractions(self.w, 4, "w"))
        if not any(self.u):
            raise PhaseSpaceError("u = 0 lies on the deleted zero section")

    @property
    def z_squared(self) -> Fraction:
        """|z|² = u1² + u2² + u3² + u4²."""
        return sum((c * c for c in self.u), Fraction(0))

    def scaled(self, signs: Sequence[int]) -> PhasePoint4:
        """Flip (u_k, w_k) together by per-index signs."""
        return PhasePoint4(
            tuple(s * c for s, c in zip(signs, self.u)),
            tuple(s * c for s, c in zip(signs, self.w)),
        )

    def substitutions(self) -> dict[sympy.Symbol, sympy.Rational]:
        values = {}
        for sym, c in zip(U + W, self.u + self.w):
            values[sym] = sympy.Rational(c.numerator, c.denominator)
        return values

    def to_json(self) -> dict[str, list[str]]:
        return {"u": _text(self.u), "w": _text(self.w)}


@dataclass(frozen=True)
class PhasePoint3:
    """Point (x, p) of the 3D Kepler phase space, x ≠ 0."""

    x: tuple[Fraction, ...]
    p: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _fractions(self.x, 3, "x"))
        object.__setattr__(self, "p", _fractions(self.p, 3, "p"))
        if not any(self.x):
            raise PhaseSpaceError("x = 0 is the collision point")

    @property
    def x_squared(self) -> Fraction:
        return sum((c * c for c in self.x), Fraction(0))

    def to_json(self) -> dict[str, list[str]]:
        return {"x": _text(self.x), "p": _text(self.p)}


@dataclass(frozen=True)
class PhasePoint2:
    """
    Planar phase-space point.

    On the oscillator side ``q`` is (u1, u3) and ``p`` is (w1, w3); on the
    Kepler side ``q`` is (ξ, η) and ``p`` is (p_ξ, p_η).
    """

    q: tuple[Fraction, ...]
    p: tuple[Fraction, ...] = (Fraction(0),) * 2

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", _fractions(self.q, 2, "q"))
        object.__setattr__(self, "p", _fractions(self.p, 2, "p"))
        if not any(self.q):
            raise PhaseSpaceError("planar point with q = 0")

    @property
    def q_squared(self) -> Fraction:
        return self.q[0] * self.q[0] + self.q[1] * self.q[1]

    def to_json(self) -> dict[str, list[str]]:
        return {"q": _text(self.q), "p": _text(self.p)}


def _check_mode(mode: str) -> None:
    if mode not in KS_MODES:
        raise PhaseSpaceError(f"Unknown KS mode {mode!r}; use one of {KS_MODES}")


def ks_map(pt: PhasePoint4, mode: str = HOPF_NORMALIZED) -> PhasePoint3:
    """
    Kustaanheimo-Stiefel map with the derived momenta.

    ``paper-literal`` uses x1 = u1u3 + u2u4 and x2 = u2u3 − u1u4 as printed;
    ``hopf-normalized`` doubles both so that |x| = |z|².
    """
    _check_mode(mode)
    u1, u2, u3, u4 = pt.u
    w1, w2, w3, w4 = pt.w
    scale = 2 if mode == HOPF_NORMALIZED else 1
    z2 = pt.z_squared
    x = (
        scale * (u1 * u3 + u2 * u4),
        scale * (u2 * u3 - u1 * u4),
        -u1 * u1 - u2 * u2 + u3 * u3 + u4 * u4,
    )
    p = (
        -(u1 * w3 + w1 * u3 + u2 * w4 + w2 * u4) / z2,
        -(u2 * w3 + w2 * u3 - w1 * u4 - u1 * w4) / z2,
        (u1 * w1 + u2 * w2 - u3 * w3 - u4 * w4) / z2,
    )
    return PhasePoint3(x, p)


def ks_constraint(pt: PhasePoint4) -> Fraction:
    """K = u1w2 − u2w1 + u3w4 − u4w3."""
    u1, u2, u3, u4 = pt.u
    w1, w2, w3, w4 = pt.w
    return u1 * w2 - u2 * w1 + u3 * w4 - u4 * w3


def lc_map(pt: PhasePoint2, momenta: str = AS_PRINTED) -> PhasePoint2:
    """
    Levi-Civita map ξ + iη = (u1 + iu3)².

    With ``momenta="canonical"`` p_ξ and p_η are divided by their bracket
    constants (2 and −2) so that {ξ, p_ξ} = {η, p_η} = 1.
    """
    if momenta not in (AS_PRINTED, CANONICAL):
        raise PhaseSpaceError(f"Unknown LC momentum normalization {momenta!r}")
    u1, u3 = pt.q
    w1, w3 = pt.p
    zz = pt.q_squared
    xi = u1 * u1 - u3 * u3
    eta = 2 * u1 * u3
    p_xi = (u1 * w1 - u3 * w3) / zz
    p_eta = -(u1 * w3 + w1 * u3) / zz
    if momenta == CANONICAL:
        p_xi, p_eta = p_xi / 2, p_eta / -2
    return PhasePoint2((xi, eta), (p_xi, p_eta))


def oscillator_plane(pt: PhasePoint4) -> PhasePoint2:
    """(u1, u3, w1, w3) of a 4D point."""
    return PhasePoint2((pt.u[0], pt.u[2]), (pt.w[0], pt.w[2]))


@lru_cache(maxsize=None)
def coordinate_functions(
    mode: str = HOPF_NORMALIZED, momenta: str = AS_PRINTED
) -> dict[str, sympy.Expr]:
    """Named coordinate functions on (u, w) as sympy expressions."""
    _check_mode(mode)
    u1, u2, u3, u4 = U
    w1, w2, w3, w4 = W
    scale = 2 if mode == HOPF_NORMALIZED else 1
    z2 = u1**2 + u2**2 + u3**2 + u4**2
    zz = u1**2 + u3**2
    functions: dict[str, sympy.Expr] = {
        **{f"u{k + 1}": U[k] for k in range(4)},
        **{f"w{k + 1}": W[k] for k in range(4)},
        "x1": scale * (u1 * u3 + u2 * u4),
        "x2": scale * (u2 * u3 - u1 * u4),
        "x3": -(u1**2) - u2**2 + u3**2 + u4**2,
        "p1": -(u1 * w3 + w1 * u3 + u2 * w4 + w2 * u4) / z2,
        "p2": -(u2 * w3 + w2 * u3 - w1 * u4 - u1 * w4) / z2,
        "p3": (u1 * w1 + u2 * w2 - u3 * w3 - u4 * w4) / z2,
        "K": u1 * w2 - u2 * w1 + u3 * w4 - u4 * w3,
        "xi": u1**2 - u3**2,
        "eta": 2 * u1 * u3,
        "p_xi": (u1 * w1 - u3 * w3) / zz,
        "p_eta": -(u1 * w3 + w1 * u3) / zz,
    }
    if momenta == CANONICAL:
        functions["p_xi"] = functions["p_xi"] / 2
        functions["p_eta"] = functions["p_eta"] / -2
    return functions


@lru_cache(maxsize=None)
def _symbolic_bracket(
    f: str, g: str, mode: str, momenta: str, scale_f: Fraction, scale_g: Fraction
) -> sympy.Expr:
    functions = coordinate_functions(mode, momenta)
    try:
        fe = functions[f] * sympy.Rational(scale_f.numerator, scale_f.denominator)
        ge = functions[g] * sympy.Rational(scale_g.numerator, scale_g.denominator)
    except KeyError as e:
        raise PhaseSpaceError(f"Unknown coordinate function {e.args[0]!r}") from e
    total = sympy.Integer(0)
    for uk, wk in zip(U, W):
        total += sympy.diff(fe, uk) * sympy.diff(ge, wk)
        total -= sympy.diff(fe, wk) * sympy.diff(ge, uk)
    return total


def poisson_bracket(
    f: str,
    g: str,
    pt: PhasePoint4,
    mode: str = HOPF_NORMALIZED,
    momenta: str = AS_PRINTED,
    scale_f: Rational = 1,
    scale_g: Rational = 1,
) -> Fraction:
    """
    {f, g} = Σ_k (∂f/∂u_k ∂g/∂w_k − ∂f/∂w_k ∂g/∂u_k) evaluated exactly at ``pt``.

    Args:
        f: Name of a coordinate function (x1, p2, K, xi, p_eta, u1, ...)
        g: Name of a coordinate function
        pt: Evaluation point
        mode: KS mode used for x and p
        momenta: LC momentum normalization
        scale_f: Constant multiplying f
        scale_g: Constant multiplying g

    Raises:
        PhaseSpaceError: Unknown name, or a bracket singular at ``pt``
    """
    expr = _symbolic_bracket(f, g, mode, momenta, Fraction(scale_f), Fraction(scale_g))
    value = expr.subs(pt.substitutions())
    if not value.is_Rational:
        raise PhaseSpaceError(f"{{{f}, {g}}} is singular at {pt.to_json()}")
    return Fraction(int(value.p), int(value.q))


def _rng_rows(rng: np.random.Generator, width: int) -> list[Fraction]:
    row = rng.integers(-SAMPLE_RANGE, SAMPLE_RANGE + 1, width)
    return [Fraction(int(v)) for v in row]


def constrained_samples(count: int, seed: int) -> list[PhasePoint4]:
    """
    Integer points with u ≠ 0 and K = 0.

    One w component with a nonzero coefficient in K is solved for.
    """
    rng = np.random.default_rng(seed)
    samples: list[PhasePoint4] = []
    while len(samples) < count:
        values = _rng_rows(rng, 8)
        u, w = values[:4], values[4:]
        if not any(u):
            continue
        # K = Σ coeff_k w_k
        coeff = (-u[1], u[0], -u[3], u[2])
        k = next(i for i, c in enumerate(coeff) if c != 0)
        rest = sum((coeff[i] * w[i] for i in range(4) if i != k), Fraction(0))
        w[k] = -rest / coeff[k]
        samples.append(PhasePoint4(tuple(u), tuple(w)))
    return samples


def generic_samples(count: int, seed: int) -> list[PhasePoint4]:
    """Integer points with u ≠ 0 and unconstrained w."""
    rng = np.random.default_rng(seed)
    samples: list[PhasePoint4] = []
    while len(samples) < count:
        values = _rng_rows(rng, 8)
        if any(values[:4]):
            samples.append(PhasePoint4(tuple(values[:4]), tuple(values[4:])))
    return samples


def planar_samples(count: int, seed: int) -> list[PhasePoint4]:
    """Points with u2 = u4 = w2 = w4 = 0 and u1, u3 both nonzero."""
    rng = np.random.default_rng(seed)
    samples: list[PhasePoint4] = []
    zero = Fraction(0)
    while len(samples) < count:
        u1, u3, w1, w3 = _rng_rows(rng, 4)
        if u1 == 0 or u3 == 0:
            continue
        samples.append(PhasePoint4((u1, zero, u3, zero), (w1, zero, w3, zero)))
    return samples


def _single_value(values: Sequence[Fraction]) -> Optional[Fraction]:
    distinct = set(values)
    return next(iter(distinct)) if len(distinct) == 1 else None


# Hopf norm


@dataclass
class HopfNormReport:
    """|x|² against |z|⁴ over sampled u."""

    mode: str
    samples: int
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures


HOPF_EXAMPLES = ((1, 0, 0, 0), (1, 1, 1, 1), (1, 1, 0, 0), (1, 0, 2, 0))


def hopf_norm_check(samples: int, seed: int, mode: str) -> HopfNormReport:
    """Compare |x|² with |z|⁴ exactly, avoiding square roots."""
    points = [PhasePoint4(u) for u in HOPF_EXAMPLES]
    points.extend(generic_samples(samples, seed))
    report = HopfNormReport(mode=mode, samples=len(points))
    for pt in points:
        x_sq = ks_map(pt, mode).x_squared
        z_four = pt.z_squared**2
        if x_sq != z_four:
            report.failures.append(
                {"u": _text(pt.u), "x_squared": str(x_sq), "z_fourth": str(z_four)}
            )
    logger.debug(f"Hopf norm ({mode}): {len(report.failures)}/{len(points)} failures")
    return report


def hopf_records(samples: int, seed: int) -> list[CheckRecord]:
    records = []
    for mode in KS_MODES:
        report = hopf_norm_check(samples, seed, mode)
        first = report.failures[0] if report.failures else None
        records.append(
            make_record(
                f"transforms.hopf-norm.{mode}",
                f"|x|² = |z|⁴ under the {mode} KS map",
                report.holds,
                residual=float(len(report.failures)),
                lhs=first["x_squared"] if first else None,
                rhs=first["z_fourth"] if first else None,
                notes={
                    "samples": report.samples,
                    "failures": len(report.failures),
                    "first_failure": first,
                },
            )
        )
    return records


# KS canonicality


@dataclass
class KSCanonicalReport:
    """Poisson brackets of the KS coordinates on K = 0 samples."""

    mode: str
    samples: int
    diagonal: dict[int, set[Fraction]] = field(default_factory=dict)
    nonzero: dict[str, list[str]] = field(default_factory=dict)

    @property
    def constant(self) -> Optional[Fraction]:
        """The single c with {x_i, p_j} = c δ_ij, or None."""
        values = set().union(*self.diagonal.values()) if self.diagonal else set()
        return _single_value(sorted(values))

    @property
    def canonical_up_to_constant(self) -> bool:
        return self.constant is not None and not self.nonzero

    def to_json(self) -> dict[str, Any]:
        return {
            "mode": self.mode,
            "samples": self.samples,
            "constant": str(self.constant) if self.constant is not None else None,
            "diagonal": {
                f"x{i}-p{i}": sorted(str(v) for v in values)
                for i, values in self.diagonal.items()
            },
            "nonzero": self.nonzero,
        }


def _bracket_groups() -> dict[str, list[tuple[str, str]]]:
    xs = [f"x{i}" for i in (1, 2, 3)]
    ps = [f"p{i}" for i in (1, 2, 3)]
    pairs = [(a, b) for i, a in enumerate(xs) for b in xs[i + 1 :]]
    return {
        "x-x": pairs,
        "p-p": [(a.replace("x", "p"), b.replace("x", "p")) for a, b in pairs],
        "x-p-offdiag": [(x, p) for x in xs for p in ps if x[1] != p[1]],
        "k-x": [("K", x) for x in xs],
        "k-p": [("K", p) for p in ps],
    }


def ks_canonical_check(
    samples: int, seed: int, mode: str, momentum_scale: Rational = 1
) -> KSCanonicalReport:
    """
    Brackets of (x, p) on constrained samples.

    Args:
        samples: Number of K = 0 points
        seed: Sampling seed
        mode: KS mode
        momentum_scale: Constant multiplying every p_i (1/c for canonical output)
    """
    points = constrained_samples(samples, seed)
    report = KSCanonicalReport(mode=mode, samples=len(points))
    groups = _bracket_groups()
    for pt in points:
        for i in (1, 2, 3):
            value = poisson_bracket(
                f"x{i}", f"p{i}", pt, mode, scale_g=momentum_scale
            )
            report.diagonal.setdefault(i, set()).add(value)
        for name, pairs in groups.items():
            for f, g in pairs:
                value = poisson_bracket(
                    f,
                    g,
                    pt,
                    mode,
                    scale_f=momentum_scale if f.startswith("p") else 1,
                    scale_g=momentum_scale if g.startswith("p") else 1,
                )
                if value != 0:
                    report.nonzero.setdefault(name, []).append(
                        f"{{{f},{g}}}={value} at {pt.to_json()}"
                    )
    return report


def ks_canonical_records(samples: int, seed: int, mode: str) -> list[CheckRecord]:
    records = []
    constants: dict[str, Optional[Fraction]] = {}
    for each in KS_MODES:
        report = ks_canonical_check(samples, seed, each)
        constants[each] = report.constant
        diag = report.to_json()["diagonal"]
        records.append(
            make_record(
                f"transforms.ks-canonical.{each}",
                "{x_i, p_j} = c δ_ij with one constant c on K = 0 samples",
                report.constant is not None,
                residual=float(len(set().union(*report.diagonal.values())) - 1),
                lhs=str(diag),
                rhs="c δ_ij",
                notes={"mode": each, "constant": report.to_json()["constant"]},
            )
        )
        for name in _bracket_groups():
            bad = report.nonzero.get(name, [])
            records.append(
                make_record(
                    f"transforms.ks-brackets.{each}.{name}",
                    f"{name} Poisson brackets vanish on K = 0 samples",
                    not bad,
                    residual=float(len(bad)),
                    lhs=bad[0] if bad else None,
                    rhs="0",
                    notes={"samples": report.samples, "failures": len(bad)},
                )
            )

    c = constants.get(mode)
    if c is None:
        records.append(
            make_record(
                f"transforms.ks-rescaled.{mode}",
                "momenta divided by c are canonical",
                False,
                residual=1.0,
                notes={"reason": "no single bracket constant to divide by"},
            )
        )
    else:
        rescaled = ks_canonical_check(samples, seed, mode, momentum_scale=1 / c)
        records.append(
            make_record(
                f"transforms.ks-rescaled.{mode}",
                "momenta divided by c are canonical",
                rescaled.canonical_up_to_constant and rescaled.constant == 1,
                residual=0.0 if rescaled.constant == 1 else 1.0,
                lhs=str(rescaled.to_json()["diagonal"]),
                rhs="δ_ij",
                notes={"c": str(c)},
            )
        )
    return records


# Levi-Civita


@dataclass
class LCBracketReport:
    """LC brackets over generic samples."""

    momenta: str
    samples: int
    values: dict[str, set[Fraction]] = field(default_factory=dict)

    def constant(self, name: str) -> Optional[Fraction]:
        return _single_value(sorted(self.values.get(name, set())))


LC_PAIRS = {
    "xi-p_xi": ("xi", "p_xi"),
    "eta-p_eta": ("eta", "p_eta"),
    "xi-p_eta": ("xi", "p_eta"),
    "eta-p_xi": ("eta", "p_xi"),
    "xi-eta": ("xi", "eta"),
    "p_xi-p_eta": ("p_xi", "p_eta"),
}


def lc_bracket_check(samples: int, seed: int, momenta: str) -> LCBracketReport:
    points = planar_samples(samples, seed)
    report = LCBracketReport(momenta=momenta, samples=len(points))
    for pt in points:
        for name, (f, g) in LC_PAIRS.items():
            value = poisson_bracket(f, g, pt, momenta=momenta)
            report.values.setdefault(name, set()).add(value)
    return report


def lc_bracket_records(samples: int, seed: int, momenta: str) -> list[CheckRecord]:
    report = lc_bracket_check(samples, seed, momenta)
    c_xi = report.constant("xi-p_xi")
    c_eta = report.constant("eta-p_eta")
    notes = {
        "momenta": momenta,
        "c_xi": str(c_xi) if c_xi is not None else None,
        "c_eta": str(c_eta) if c_eta is not None else None,
    }
    records = [
        make_record(
            "transforms.lc-canonical.constants",
            "{ξ, p_ξ} and {η, p_η} are sample-independent",
            c_xi is not None and c_eta is not None,
            notes=notes,
        ),
        make_record(
            "transforms.lc-canonical.equal-constants",
            "{ξ, p_ξ} = {η, p_η}",
            c_xi is not None and c_xi == c_eta,
            residual=(
                float(abs(c_xi - c_eta))
                if c_xi is not None and c_eta is not None
                else 0.0
            ),
            lhs=str(c_xi),
            rhs=str(c_eta),
            notes=notes,
        ),
    ]
    for name in ("xi-p_eta", "eta-p_xi", "xi-eta", "p_xi-p_eta"):
        values = report.values.get(name, set())
        records.append(
            make_record(
                f"transforms.lc-brackets.{name}",
                f"{{{name.replace('-', ', ')}}} = 0",
                values == {Fraction(0)},
                residual=float(max((abs(v) for v in values), default=0)),
                notes={"samples": report.samples},
            )
        )
    return records


@dataclass
class TwoToOneReport:
    """Fiber structure of the LC map."""

    samples: int
    antipodal_failures: list[str] = field(default_factory=list)
    extra_preimages: list[str] = field(default_factory=list)

    @property
    def is_two_to_one(self) -> bool:
        return not self.antipodal_failures and not self.extra_preimages


SIGN_PATTERNS = tuple(product((1, -1), repeat=2))


def lc_two_to_one(samples: int, seed: int) -> TwoToOneReport:
    """
    lc_map(u, w) = lc_map(−u, −w), and no other sign pattern of
    (u1, w1), (u3, w3) reaches the same image.
    """
    points = [oscillator_plane(pt) for pt in planar_samples(samples, seed)]
    report = TwoToOneReport(samples=len(points))
    for pt in points:
        image = lc_map(pt)
        for s1, s3 in SIGN_PATTERNS:
            flipped = PhasePoint2(
                (s1 * pt.q[0], s3 * pt.q[1]), (s1 * pt.p[0], s3 * pt.p[1])
            )
            same = lc_map(flipped) == image
            if s1 == s3 and not same:
                report.antipodal_failures.append(str(pt.to_json()))
            elif s1 != s3 and same:
                report.extra_preimages.append(str(pt.to_json()))
    return report


def lc_square_check(samples: int, seed: int) -> list[str]:
    """Points where ξ + iη ≠ (u1 + iu3)²."""
    bad = []
    for pt in planar_samples(samples, seed):
        plane = oscillator_plane(pt)
        u1, u3 = plane.q
        xi, eta = lc_map(plane).q
        if (xi, eta) != (u1 * u1 - u3 * u3, 2 * u1 * u3):
            bad.append(str(plane.to_json()))
    return bad


def lc_records(samples: int, seed: int, momenta: str) -> list[CheckRecord]:
    fiber = lc_two_to_one(samples, seed)
    square = lc_square_check(samples, seed)
    records = [
        make_record(
            "transforms.lc.antipodal",
            "lc_map(u, w) = lc_map(−u, −w)",
            not fiber.antipodal_failures,
            residual=float(len(fiber.antipodal_failures)),
            notes={"samples": fiber.samples},
        ),
        make_record(
            "transforms.lc.two-to-one",
            "no other sign pattern shares the image",
            fiber.is_two_to_one,
            residual=float(len(fiber.extra_preimages)),
            lhs=fiber.extra_preimages[0] if fiber.extra_preimages else None,
            notes={"samples": fiber.samples, "fiber": "Z2"},
        ),
        make_record(
            "transforms.lc.square",
            "ξ + iη = (u1 + iu3)²",
            not square,
            residual=float(len(square)),
        ),
    ]
    records.extend(lc_bracket_records(samples, seed, momenta))
    return records


# KS → LC


KS_PLANAR = ("x1", "x3", "p1", "p3")
LC_COORDINATES = ("eta", "xi", "p_eta", "p_xi")


@dataclass
class RestrictionReport:
    """Fitted identification of planar KS coordinates with LC coordinates."""

    mode: str
    samples: int
    identification: dict[str, tuple[str, Fraction]] = field(default_factory=dict)
    transverse_nonzero: int = 0

    @property
    def consistent(self) -> bool:
        complete = len(self.identification) == len(KS_PLANAR)
        return complete and not self.transverse_nonzero

    def describe(self) -> dict[str, str]:
        return {k: f"{c}*{name}" for k, (name, c) in self.identification.items()}


def _fit_ratio(ks: list[Fraction], lc: list[Fraction]) -> Optional[Fraction]:
    ratio: Optional[Fraction] = None
    for a, b in zip(ks, lc):
        if b == 0:
            if a != 0:
                return None
            continue
        if ratio is None:
            ratio = a / b
        elif a != ratio * b:
            return None
    return ratio


def ks_restrict_to_lc(samples: int, seed: int, mode: str) -> RestrictionReport:
    """
    Apply KS with u2 = u4 = w2 = w4 = 0 and fit each of x1, x3, p1, p3 as a
    constant multiple of one LC coordinate.
    """
    points = planar_samples(samples, seed)
    report = RestrictionReport(mode=mode, samples=len(points))
    ks_values: dict[str, list[Fraction]] = {name: [] for name in KS_PLANAR}
    lc_values: dict[str, list[Fraction]] = {name: [] for name in LC_COORDINATES}
    for pt in points:
        kepler = ks_map(pt, mode)
        planar = lc_map(oscillator_plane(pt))
        if kepler.x[1] != 0 or kepler.p[1] != 0:
            report.transverse_nonzero += 1
        for name, value in zip(KS_PLANAR, (kepler.x[0], kepler.x[2], *kepler.p[::2])):
            ks_values[name].append(value)
        for name, value in zip(("xi", "eta", "p_xi", "p_eta"), planar.q + planar.p):
            lc_values[name].append(value)

    for ks_name in KS_PLANAR:
        for lc_name in LC_COORDINATES:
            ratio = _fit_ratio(ks_values[ks_name], lc_values[lc_name])
            if ratio is not None and ratio != 0:
                report.identification[ks_name] = (lc_name, ratio)
                break
        else:
            logger.warning(f"No LC coordinate matches KS {ks_name} ({mode})")
    return report


def restriction_records(samples: int, seed: int, mode: str) -> list[CheckRecord]:
    report = ks_restrict_to_lc(samples, seed, mode)
    fitted = report.describe()
    printed_claim = report.identification.get("x1") == (
        "eta",
        Fraction(1),
    ) and report.identification.get("x3") == ("xi", Fraction(1))
    return [
        make_record(
            f"transforms.ks-restriction.{mode}",
            "planar KS coordinates are constant multiples of LC coordinates",
            report.consistent,
            residual=float(report.transverse_nonzero),
            lhs=str(fitted),
            notes={"identification": fitted, "samples": report.samples},
        ),
        make_record(
            "transforms.ks-restriction.printed-x3-equals-xi",
            "x1 = η and x3 = ξ on the plane u2 = u4 = w2 = w4 = 0",
            printed_claim,
            residual=0.0 if printed_claim else 1.0,
            lhs=f"x1 = {fitted.get('x1')}, x3 = {fitted.get('x3')}",
            rhs="x1 = 1*eta, x3 = 1*xi",
            notes={"mode": mode},
        ),
    ]


def run_checks(settings: SuiteConfig) -> list[CheckRecord]:
    """Full transforms suite; both KS modes are always audited."""
    trials, seed = settings.trials, settings.seed
    records = hopf_records(trials, seed)
    records.extend(ks_canonical_records(trials, seed, settings.ks_mode))
    records.extend(lc_records(trials, seed, settings.lc_momenta))
    records.extend(restriction_records(trials, seed, settings.ks_mode))
    return records
