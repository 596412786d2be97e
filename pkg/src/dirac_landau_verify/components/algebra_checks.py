"""
Property checks of the Weyl engine and its Fock realization.

Sampled elements are low-degree with small Gaussian-integer coefficients so
that every identity can be asserted as an exact zero.
"""

from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING

import numpy as np

from .check_record import CheckRecord, exact_check, exact_family_check, numeric_check
from .fock import (
    FockBasis,
    hermiticity_residual,
    interior_residual,
    ladder,
    oscillator_dictionary,
    realize,
    spectrum,
)
from .hydrogen import RADIAL
from .landau import HOLOMORPHIC, OSCILLATOR, holomorphic_to_phase
from .scalar import Scalar
from .weyl import (
    AlgebraSignature,
    WeylElement,
    adjoint,
    commutator,
    multiply,
    radial_reduce,
    substitute,
)

if TYPE_CHECKING:
    from ..verify_config import SuiteConfig

logger = logging.getLogger(__name__)

COEFF_RANGE = 3
# Radial products are the slow path; cap their sample count.
RADIAL_TRIALS = 8


def random_element(
    sig: AlgebraSignature,
    rng: np.random.Generator,
    max_degree: int = 2,
    terms: int = 3,
) -> WeylElement:
    """Sum of ``terms`` random monomials of degree ≤ ``max_degree``."""
    raw = {}
    while len(raw) < terms:
        exponents = rng.integers(0, max_degree + 1, size=2 * sig.size)
        if exponents.sum() > max_degree:
            continue
        alpha = tuple(int(k) for k in exponents[: sig.size])
        beta = tuple(int(k) for k in exponents[sig.size :])
        re, im = rng.integers(-COEFF_RANGE, COEFF_RANGE + 1, size=2)
        coeff = Scalar.gaussian(int(re), int(im))
        if not coeff.is_zero():
            raw[(alpha, 0, 0, beta)] = coeff
    return WeylElement(sig, raw)


def random_radial_element(
    rng: np.random.Generator, terms: int = 2, sig: AlgebraSignature = RADIAL
) -> WeylElement:
    """Random element with r and (x²)⁻¹ factors and at most one derivative."""
    raw = {}
    while len(raw) < terms:
        alpha = tuple(int(k) for k in rng.integers(0, 2, size=sig.size))
        eps, m = (int(k) for k in rng.integers(0, 2, size=2))
        # index -1 gives no derivative
        beta = sig.unit_vector(int(rng.integers(-1, sig.size)))
        coeff = Scalar(int(rng.integers(1, COEFF_RANGE + 1)))
        raw[(alpha, eps, m, beta)] = coeff
    return WeylElement(sig, raw, normalized=False)


def _jacobi(a: WeylElement, b: WeylElement, c: WeylElement) -> WeylElement:
    return (
        commutator(commutator(a, b), c)
        + commutator(commutator(b, c), a)
        + commutator(commutator(c, a), b)
    )


def leibniz_records() -> list[CheckRecord]:
    sig = HOLOMORPHIC
    z, d = sig.gen("z"), sig.gen("dz")
    return [
        exact_check("weyl.leibniz.d-z", "∂·z = z∂ + 1", d * z, z * d + 1),
        exact_check(
            "weyl.leibniz.d2-z", "∂²·z = z∂² + 2∂", (d**2) * z, z * d**2 + d * 2
        ),
        exact_check("weyl.commutator.zd-z", "[z∂, z] = z", commutator(z * d, z), z),
        exact_check(
            "weyl.commutator.zd-d", "[z∂, ∂] = −∂", commutator(z * d, d), -d
        ),
    ]


def property_records(trials: int, seed: int) -> list[CheckRecord]:
    """Jacobi, associativity, bilinearity, antisymmetry and normal-form idempotence."""
    rng = np.random.default_rng(seed)
    sig = OSCILLATOR
    triples = [
        tuple(random_element(sig, rng) for _ in range(3)) for _ in range(trials)
    ]
    zero = sig.zero()
    jacobi = [(_jacobi(a, b, c), zero) for a, b, c in triples]
    assoc = [
        (multiply(multiply(a, b), c), multiply(a, multiply(b, c)))
        for a, b, c in triples
    ]
    linear = []
    antisym = []
    normal = []
    for a, b, c in triples:
        k = Scalar.gaussian(int(rng.integers(-3, 4)), int(rng.integers(-3, 4)))
        linear.append(
            (
                commutator(a.scale(k) + b, c),
                commutator(a, c).scale(k) + commutator(b, c),
            )
        )
        antisym.append((commutator(a, b), -commutator(b, a)))
        product = multiply(a, b)
        normal.append((WeylElement(sig, product.terms, normalized=False), product))
    return [
        exact_family_check(
            "weyl.jacobi", "[[a,b],c] + [[b,c],a] + [[c,a],b] = 0", jacobi
        ),
        exact_family_check("weyl.associativity", "(ab)c = a(bc)", assoc),
        exact_family_check(
            "weyl.bilinearity", "[ka + b, c] = k[a,c] + [b,c]", linear
        ),
        exact_family_check("weyl.antisymmetry", "[a,b] = −[b,a]", antisym),
        exact_family_check(
            "weyl.normal-form", "renormalizing a product leaves it unchanged", normal
        ),
    ]


def homomorphism_records(trials: int, seed: int) -> list[CheckRecord]:
    """substitute(ab) = substitute(a) substitute(b), holomorphic → phase."""
    rng = np.random.default_rng(seed + 1)
    mapping = holomorphic_to_phase()
    pairs = []
    for _ in range(trials):
        a = random_element(HOLOMORPHIC, rng)
        b = random_element(HOLOMORPHIC, rng)
        pairs.append(
            (
                substitute(multiply(a, b), mapping),
                multiply(substitute(a, mapping), substitute(b, mapping)),
            )
        )
    return [
        exact_family_check(
            "weyl.substitute-homomorphism",
            "canonical substitution respects products",
            pairs,
            notes={"map": mapping.describe()},
        )
    ]


def radial_records(trials: int, seed: int) -> list[CheckRecord]:
    sig = RADIAL
    x1, x2, x3 = sig.gens(*sig.position_names)
    d1 = sig.gen(sig.derivative_names[0])
    r, r_inv = sig.radius(), sig.inverse_radius()
    records = [
        exact_check(
            "weyl.radial.r-squared",
            "r² = x₁² + x₂² + x₃²",
            r * r,
            x1 * x1 + x2 * x2 + x3 * x3,
        ),
        exact_check(
            "weyl.radial.d-r",
            "[∂₁, r] = x₁ r⁻¹",
            commutator(d1, r),
            x1 * r_inv,
        ),
        exact_check("weyl.radial.inverse", "r · r⁻¹ = 1", r * r_inv, sig.one()),
    ]
    rng = np.random.default_rng(seed + 2)
    count = min(trials, RADIAL_TRIALS)
    idempotent = []
    for _ in range(count):
        product = multiply(random_radial_element(rng), random_radial_element(rng))
        once = radial_reduce(product)
        idempotent.append((radial_reduce(once), once))
    records.append(
        exact_family_check(
            "weyl.radial.idempotent", "radial_reduce is idempotent", idempotent
        )
    )
    return records


def fock_records(
    cutoff: int, tolerance: float, trials: int, seed: int
) -> list[CheckRecord]:
    """Ladder normalization, number spectrum, homomorphism and Hermiticity."""
    single = FockBasis(1, cutoff)
    raise_op = ladder(single, 0, "raise")
    lower_op = ladder(single, 0, "lower")
    norm_residual = max(
        abs(raise_op.element((1,), (0,)) - 1),
        abs(raise_op.element((2,), (1,)) - math.sqrt(2)),
    )
    number = spectrum(raise_op @ lower_op)
    number_residual = float("inf")
    if len(number) == cutoff + 1:
        number_residual = max(abs(level.value - n) for n, level in enumerate(number))

    basis = FockBasis(2, cutoff)
    dictionary = oscillator_dictionary(OSCILLATOR, basis)
    rng = np.random.default_rng(seed + 3)
    homomorphism = 0.0
    hermitian = 0.0
    for _ in range(trials):
        a = random_element(OSCILLATOR, rng)
        b = random_element(OSCILLATOR, rng)
        lhs = realize(commutator(a, b), dictionary)
        rhs = realize(a, dictionary).commutator(realize(b, dictionary))
        homomorphism = max(homomorphism, interior_residual(lhs, rhs))
        symmetric = realize(a + adjoint(a), dictionary)
        hermitian = max(hermitian, hermiticity_residual(symmetric))
    a_minus, a_plus = OSCILLATOR.gens("a_minus", "a_plus")
    ccr = interior_residual(
        realize(a_minus, dictionary).commutator(realize(a_plus, dictionary)),
        basis.identity(),
    )
    return [
        numeric_check(
            "fock.ladder-normalization",
            "⟨n+1|a⁺|n⟩ = √(n+1)",
            norm_residual,
            tolerance,
        ),
        numeric_check(
            "fock.number-spectrum",
            f"a⁺a⁻ has eigenvalues 0..{cutoff}",
            number_residual,
            tolerance,
        ),
        numeric_check(
            "fock.ccr", "[a⁻, a⁺] = 1 on the interior", ccr, tolerance
        ),
        numeric_check(
            "fock.homomorphism",
            "realize([a,b]) = [realize(a), realize(b)] on the interior",
            homomorphism,
            tolerance,
            notes={"samples": trials, "cutoff": cutoff},
        ),
        numeric_check(
            "fock.hermiticity",
            "realize(a + a†) is Hermitian on the interior",
            hermitian,
            tolerance,
            notes={"samples": trials},
        ),
    ]


def run_checks(settings: SuiteConfig) -> list[CheckRecord]:
    """Weyl engine and Fock layer suite."""
    records = leibniz_records()
    records.extend(property_records(settings.trials, settings.seed))
    records.extend(homomorphism_records(settings.trials, settings.seed))
    records.extend(radial_records(settings.trials, settings.seed))
    records.extend(
        fock_records(
            settings.fock_cutoff_2mode,
            settings.tolerance_numeric,
            settings.trials,
            settings.seed,
        )
    )
    logger.info(f"Weyl suite: {len(records)} checks")
    return records
