"""
Normally ordered Weyl algebra elements with exact coefficients.

An ``AlgebraSignature`` declares ordered position generators and the
derivative generators paired with them ([derivative_k, position_k] = 1).
A radial signature additionally carries r = |x| over the first three
positions together with its inverse r⁻¹ = r/(x²).

Every ``WeylElement`` is stored in normal form: a map from monomials
``(alpha, eps, m, beta)`` meaning x^alpha · r^eps / (x²)^m · ∂^beta to
nonzero ``Scalar`` coefficients, with all derivatives on the right.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Any, Optional, Union

from .errors import DegreeOverflowError, NonCanonicalMapError, SignatureMismatchError
from .scalar import ONE, ZERO, Scalar, ScalarLike

logger = logging.getLogger(__name__)

DEFAULT_DEGREE_CAP = 16

# (alpha, eps, m, beta)
Monomial = tuple[tuple[int, ...], int, int, tuple[int, ...]]
# (alpha, eps, m) for functions of the positions
FunctionMonomial = tuple[tuple[int, ...], int, int]


@dataclass(frozen=True)
class AlgebraSignature:
    """Declared generators of a Weyl algebra.

    Attributes:
        name: Short label used in reports
        position_names: Ordered position symbols
        derivative_names: Derivative symbols paired index-wise with positions
        radial_dim: 0 for a polynomial algebra, otherwise the number of leading
            positions entering r² = x₁² + ... (3 for the hydrogen algebra)
        adjoint_kind: "ladder" when position_k and derivative_k are mutual
            adjoints (a⁺ ↔ a⁻), "real" when positions are self-adjoint and
            derivatives anti-self-adjoint, "none" when no formal adjoint is declared
        degree_cap: Largest allowed net degree of any term
    """

    name: str
    position_names: tuple[str, ...]
    derivative_names: tuple[str, ...]
    radial_dim: int = 0
    adjoint_kind: str = "real"
    degree_cap: int = DEFAULT_DEGREE_CAP
    _lookup: dict[str, tuple[str, int]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if len(self.position_names) != len(self.derivative_names):
            raise ValueError(
                f"Signature {self.name}: positions and derivatives must pair up"
            )
        names = self.position_names + self.derivative_names
        if len(set(names)) != len(names):
            raise ValueError(f"Signature {self.name}: generator names must be unique")
        if self.radial_dim not in (0,) and not (
            1 <= self.radial_dim <= len(self.position_names)
        ):
            raise ValueError(f"Signature {self.name}: invalid radial dimension")
        if self.adjoint_kind not in ("ladder", "real", "none"):
            raise ValueError(f"Unknown adjoint kind: {self.adjoint_kind}")
        lookup = {n: ("position", k) for k, n in enumerate(self.position_names)}
        lookup.update(
            {n: ("derivative", k) for k, n in enumerate(self.derivative_names)}
        )
        object.__setattr__(self, "_lookup", lookup)

    @property
    def size(self) -> int:
        return len(self.position_names)

    @property
    def is_radial(self) -> bool:
        return self.radial_dim > 0

    @property
    def pairing_constant(self) -> Scalar:
        """Value of [derivative_k, position_k]; fixed to 1."""
        return ONE

    @property
    def generator_names(self) -> tuple[str, ...]:
        return self.position_names + self.derivative_names

    def locate(self, name: str) -> tuple[str, int]:
        """Return ("position" | "derivative", index) for a generator name."""
        try:
            return self._lookup[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a generator of {self.name}") from None

    def unit_vector(self, k: Optional[int] = None) -> tuple[int, ...]:
        return tuple(1 if j == k else 0 for j in range(self.size))

    def zero(self) -> WeylElement:
        return WeylElement(self, {})

    def constant(self, value: ScalarLike) -> WeylElement:
        zero = self.unit_vector()
        return WeylElement(self, {(zero, 0, 0, zero): Scalar.coerce(value)})

    def one(self) -> WeylElement:
        return self.constant(1)

    def gen(self, name: str) -> WeylElement:
        """Generator element by name."""
        kind, k = self.locate(name)
        zero = self.unit_vector()
        if kind == "position":
            return WeylElement(self, {(self.unit_vector(k), 0, 0, zero): ONE})
        return WeylElement(self, {(zero, 0, 0, self.unit_vector(k)): ONE})

    def gens(self, *names: str) -> tuple[WeylElement, ...]:
        return tuple(self.gen(n) for n in names)

    def radius(self) -> WeylElement:
        """The radial generator r."""
        self._require_radial()
        zero = self.unit_vector()
        return WeylElement(self, {(zero, 1, 0, zero): ONE})

    def inverse_radius(self) -> WeylElement:
        """r⁻¹, stored as r/(x²)."""
        self._require_radial()
        zero = self.unit_vector()
        return WeylElement(self, {(zero, 1, 1, zero): ONE})

    def _require_radial(self) -> None:
        if not self.is_radial:
            raise ValueError(f"Signature {self.name} has no radial generator")


class WeylElement:
    """Immutable normally ordered element of a Weyl algebra."""

    __slots__ = ("signature", "_terms", "_hash")

    def __init__(
        self,
        signature: AlgebraSignature,
        terms: Mapping[Monomial, Scalar],
        *,
        normalized: bool = True,
    ):
        if not normalized:
            terms = _normalize(signature, terms)
        clean = {k: v for k, v in terms.items() if not v.is_zero()}
        object.__setattr__(self, "signature", signature)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("WeylElement is immutable")

    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Scalar]]:
        """Terms in deterministic (sorted) order."""
        for key in sorted(self._terms):
            yield key, self._terms[key]

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Largest net degree |α| + ε − 2m + |β| over the terms (0 for zero)."""
        if not self._terms:
            return 0
        return max(_net_degree(key) for key in self._terms)

    def max_denominator_power(self) -> int:
        return max((key[2] for key in self._terms), default=0)

    def has_derivatives(self) -> bool:
        return any(any(key[3]) for key in self._terms)

    def constant_term(self) -> Scalar:
        zero = self.signature.unit_vector()
        return self._terms.get((zero, 0, 0, zero), ZERO)

    def max_abs_coefficient(self) -> float:
        return max((c.magnitude() for c in self._terms.values()), default=0.0)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check(self, other: WeylElement) -> None:
        if other.signature != self.signature:
            raise SignatureMismatchError(
                f"Cannot combine elements of {self.signature.name} and "
                f"{other.signature.name}"
            )

    def __add__(self, other: Union[WeylElement, ScalarLike]) -> WeylElement:
        if not isinstance(other, WeylElement):
            other = self.signature.constant(other)
        self._check(other)
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms.get(key, ZERO) + value
        return WeylElement(self.signature, terms)

    __radd__ = __add__

    def __neg__(self) -> WeylElement:
        return WeylElement(self.signature, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: Union[WeylElement, ScalarLike]) -> WeylElement:
        if not isinstance(other, WeylElement):
            other = self.signature.constant(other)
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> WeylElement:
        return self.signature.constant(other) - self

    def scale(self, factor: ScalarLike) -> WeylElement:
        factor = Scalar.coerce(factor)
        if factor.is_zero():
            return self.signature.zero()
        terms = {k: v * factor for k, v in self._terms.items()}
        return WeylElement(self.signature, terms)

    def __mul__(self, other: Union[WeylElement, ScalarLike]) -> WeylElement:
        if isinstance(other, WeylElement):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other: ScalarLike) -> WeylElement:
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other: ScalarLike) -> WeylElement:
        return self.scale(Scalar.coerce(other).inverse())

    def __pow__(self, exponent: int) -> WeylElement:
        if exponent < 0:
            raise ValueError("Negative powers are not defined in the Weyl algebra")
        result = self.signature.one()
        for _ in range(exponent):
            result = multiply(result, self)
        return result

    # ------------------------------------------------------------------
    # Comparison and serialization
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeylElement):
            return self.signature == other.signature and self._terms == other._terms
        if isinstance(other, (int, Fraction, Scalar)) and not isinstance(other, bool):
            return self == self.signature.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.signature, frozenset(self._terms.items())))
            )
        return self._hash  # type: ignore[return-value]

    def __repr__(self) -> str:
        return f"WeylElement[{self.signature.name}]({self.to_text()})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Render as ``coeff * x^a y^b r^e (x2)^-m d1^c d2^d`` terms."""
        if not self._terms:
            return "0"
        return " + ".join(
            _term_text(self.signature, key, coeff) for key, coeff in self.items()
        )

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {
                "coeff": coeff.to_json(),
                "positions": list(key[0]),
                "r": key[1],
                "x2_power": -key[2],
                "derivatives": list(key[3]),
            }
            for key, coeff in self.items()
        ]

    @classmethod
    def from_json(
        cls, signature: AlgebraSignature, data: Iterable[Mapping[str, Any]]
    ) -> WeylElement:
        terms: dict[Monomial, Scalar] = {}
        for record in data:
            key = (
                tuple(record["positions"]),
                int(record.get("r", 0)),
                -int(record.get("x2_power", 0)),
                tuple(record["derivatives"]),
            )
            terms[key] = terms.get(key, ZERO) + Scalar.parse(record["coeff"])
        return cls(signature, terms, normalized=False)


# ----------------------------------------------------------------------
# Monomial calculus
# ----------------------------------------------------------------------


def _net_degree(key: Monomial) -> int:
    return sum(key[0]) + key[1] - 2 * key[2] + sum(key[3])


def _add_vec(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def _shift(a: tuple[int, ...], k: int, delta: int) -> tuple[int, ...]:
    out = list(a)
    out[k] += delta
    return tuple(out)


@lru_cache(maxsize=None)
def _square_sum(size: int, radial_dim: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of x₁², ..., x_d² (d = radial_dim)."""
    return tuple(
        tuple(2 if j == k else 0 for j in range(size)) for k in range(radial_dim)
    )


@lru_cache(maxsize=None)
def _partial(
    fmono: FunctionMonomial, k: int, radial_dim: int
) -> tuple[tuple[FunctionMonomial, int], ...]:
    """∂_k of x^α r^ε (x²)^-m as an integer combination of function monomials."""
    alpha, eps, m = fmono
    out: dict[FunctionMonomial, int] = {}
    if alpha[k]:
        key = (_shift(alpha, k, -1), eps, m)
        out[key] = out.get(key, 0) + alpha[k]
    if k < radial_dim and eps - 2 * m:
        # ∂_k r = x_k r / x², ∂_k (x²)^-m = -2m x_k (x²)^-m-1
        key = (_shift(alpha, k, 1), eps, m + 1)
        out[key] = out.get(key, 0) + eps - 2 * m
    return tuple(out.items())


@lru_cache(maxsize=None)
def _multi_partial(
    fmono: FunctionMonomial, kappa: tuple[int, ...], radial_dim: int
) -> tuple[tuple[FunctionMonomial, int], ...]:
    """∂^κ of a function monomial."""
    current: dict[FunctionMonomial, int] = {fmono: 1}
    for k, times in enumerate(kappa):
        for _ in range(times):
            nxt: dict[FunctionMonomial, int] = {}
            for mono, coeff in current.items():
                for child, c in _partial(mono, k, radial_dim):
                    nxt[child] = nxt.get(child, 0) + coeff * c
            current = {key: value for key, value in nxt.items() if value}
            if not current:
                return ()
    return tuple(current.items())


def _function_product(
    a: FunctionMonomial, b: FunctionMonomial, size: int, radial_dim: int
) -> list[FunctionMonomial]:
    """Product of two function monomials after r² → x², as a sum of monomials."""
    alpha = _add_vec(a[0], b[0])
    eps = a[1] + b[1]
    m = a[2] + b[2]
    if eps < 2:
        return [(alpha, eps, m)]
    if m >= 1:
        return [(alpha, 0, m - 1)]
    return [(_add_vec(alpha, sq), 0, 0) for sq in _square_sum(size, radial_dim)]


def _sub_multi_indices(beta: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not beta:
        yield ()
        return
    for head in range(beta[0] + 1):
        for tail in _sub_multi_indices(beta[1:]):
            yield (head,) + tail


def _multi_binomial(beta: tuple[int, ...], kappa: tuple[int, ...]) -> int:
    result = 1
    for b, k in zip(beta, kappa):
        result *= comb(b, k)
    return result


def _monomial_product(
    sig: AlgebraSignature, left: Monomial, right: Monomial
) -> dict[Monomial, int]:
    """(F1 ∂^β1)(F2 ∂^β2) = Σ_κ C(β1,κ) F1 (∂^κ F2) ∂^(β1-κ+β2)."""
    alpha1, eps1, m1, beta1 = left
    alpha2, eps2, m2, beta2 = right
    f1 = (alpha1, eps1, m1)
    out: dict[Monomial, int] = {}
    for kappa in _sub_multi_indices(beta1):
        binom = _multi_binomial(beta1, kappa)
        rest = tuple(b - k + d for b, k, d in zip(beta1, kappa, beta2))
        for dmono, dcoeff in _multi_partial((alpha2, eps2, m2), kappa, sig.radial_dim):
            for prod in _function_product(f1, dmono, sig.size, sig.radial_dim):
                key = (prod[0], prod[1], prod[2], rest)
                out[key] = out.get(key, 0) + binom * dcoeff
    return out


# ----------------------------------------------------------------------
# Radial normal form
# ----------------------------------------------------------------------


def _divide_by_square_sum(
    numerator: dict[tuple[int, ...], Scalar], size: int, radial_dim: int
) -> Optional[dict[tuple[int, ...], Scalar]]:
    """Exact division by x₁² + ... + x_d², or None when not divisible."""
    squares = _square_sum(size, radial_dim)
    remainder = dict(numerator)
    quotient: dict[tuple[int, ...], Scalar] = {}
    while True:
        leading = [a for a in remainder if a[0] >= 2]
        if not leading:
            break
        alpha = max(leading)
        coeff = remainder.pop(alpha)
        q = _shift(alpha, 0, -2)
        quotient[q] = quotient.get(q, ZERO) + coeff
        for sq in squares[1:]:
            key = _add_vec(q, sq)
            value = remainder.get(key, ZERO) - coeff
            if value.is_zero():
                remainder.pop(key, None)
            else:
                remainder[key] = value
    if any(not v.is_zero() for v in remainder.values()):
        return None
    return {k: v for k, v in quotient.items() if not v.is_zero()}


def _multiply_by_square_sum_power(
    poly: dict[tuple[int, ...], Scalar], power: int, size: int, radial_dim: int
) -> dict[tuple[int, ...], Scalar]:
    squares = _square_sum(size, radial_dim)
    for _ in range(power):
        nxt: dict[tuple[int, ...], Scalar] = {}
        for alpha, coeff in poly.items():
            for sq in squares:
                key = _add_vec(alpha, sq)
                nxt[key] = nxt.get(key, ZERO) + coeff
        poly = nxt
    return poly


def _normalize(
    sig: AlgebraSignature, terms: Mapping[Monomial, Scalar]
) -> dict[Monomial, Scalar]:
    """Canonical form (f + g·r)/(x²)^m per derivative multi-index."""
    if not sig.is_radial:
        for key in terms:
            if key[1] or key[2]:
                raise ValueError(
                    f"Radial factors are not allowed in signature {sig.name}"
                )
        return {k: v for k, v in terms.items() if not v.is_zero()}

    # Fold r² into x² first so ε is 0 or 1.
    folded: dict[Monomial, Scalar] = {}
    for (alpha, eps, m, beta), coeff in terms.items():
        if coeff.is_zero():
            continue
        extra, eps = divmod(eps, 2)
        pieces = [(alpha, m)]
        for _ in range(extra):
            expanded = []
            for a, mm in pieces:
                if mm:
                    expanded.append((a, mm - 1))
                else:
                    expanded.extend(
                        (_add_vec(a, sq), 0)
                        for sq in _square_sum(sig.size, sig.radial_dim)
                    )
            pieces = expanded
        for a, mm in pieces:
            key = (a, eps, mm, beta)
            folded[key] = folded.get(key, ZERO) + coeff

    groups: dict[tuple[int, tuple[int, ...]], dict[tuple[tuple[int, ...], int], Scalar]]
    groups = {}
    for (alpha, eps, m, beta), coeff in folded.items():
        if coeff.is_zero():
            continue
        groups.setdefault((eps, beta), {})[(alpha, m)] = coeff

    out: dict[Monomial, Scalar] = {}
    for (eps, beta), group in groups.items():
        top = max(m for (_, m) in group)
        numerator: dict[tuple[int, ...], Scalar] = {}
        for (alpha, m), coeff in group.items():
            lifted = _multiply_by_square_sum_power(
                {alpha: coeff}, top - m, sig.size, sig.radial_dim
            )
            for a, c in lifted.items():
                numerator[a] = numerator.get(a, ZERO) + c
        numerator = {a: c for a, c in numerator.items() if not c.is_zero()}
        while top > 0 and numerator:
            quotient = _divide_by_square_sum(numerator, sig.size, sig.radial_dim)
            if quotient is None:
                break
            numerator = quotient
            top -= 1
        if not numerator:
            continue
        for alpha, coeff in numerator.items():
            out[(alpha, eps, top if numerator else 0, beta)] = coeff
    return out


# ----------------------------------------------------------------------
# Public operations
# ----------------------------------------------------------------------


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    """Normally ordered product a·b."""
    a._check(b)
    sig = a.signature
    raw: dict[Monomial, Scalar] = {}
    for left, lc in a._terms.items():
        for right, rc in b._terms.items():
            coeff = lc * rc
            for key, n in _monomial_product(sig, left, right).items():
                raw[key] = raw.get(key, ZERO) + coeff * n
    if sig.is_radial:
        result = WeylElement(sig, raw, normalized=False)
    else:
        result = WeylElement(sig, raw)
    if result.degree() > sig.degree_cap:
        raise DegreeOverflowError(
            f"Product degree {result.degree()} exceeds cap {sig.degree_cap} "
            f"in {sig.name}"
        )
    return result


def commutator(a: WeylElement, b: WeylElement) -> WeylElement:
    """[a, b] = ab − ba."""
    return multiply(a, b) - multiply(b, a)


def anticommutator(a: WeylElement, b: WeylElement) -> WeylElement:
    """{a, b} = ab + ba."""
    return multiply(a, b) + multiply(b, a)


def radial_reduce(e: WeylElement) -> WeylElement:
    """Re-derive the canonical radial form; idempotent."""
    if not e.signature.is_radial:
        raise ValueError(f"Signature {e.signature.name} is not radial")
    return WeylElement(e.signature, e.terms, normalized=False)


def act_on_function(e: WeylElement, f: WeylElement) -> WeylElement:
    """Apply the differential operator ``e`` to the function ``f``.

    ``f`` must be free of derivatives; the result is again a function.
    """
    if f.has_derivatives():
        raise ValueError("act_on_function expects a derivative-free element")
    product = multiply(e, f)
    return WeylElement(
        e.signature, {k: v for k, v in product.terms.items() if not any(k[3])}
    )


def adjoint(e: WeylElement) -> WeylElement:
    """Formal adjoint per the signature's adjoint kind.

    "ladder": position_k† = derivative_k, so (x^α ∂^β)† = x^β ∂^α.
    "real": positions self-adjoint, derivatives anti-self-adjoint.
    """
    sig = e.signature
    if sig.is_radial:
        raise ValueError("Adjoint is only defined for polynomial signatures")
    if sig.adjoint_kind == "none":
        raise ValueError(f"Signature {sig.name} declares no adjoint")
    if sig.adjoint_kind == "ladder":
        return WeylElement(
            sig,
            {(b, 0, 0, a): c.conjugate() for (a, _, _, b), c in e.items()},
        )
    result = sig.zero()
    zero = sig.unit_vector()
    for (alpha, _, _, beta), coeff in e.items():
        sign = -1 if sum(beta) % 2 else 1
        left = WeylElement(sig, {(zero, 0, 0, beta): ONE})
        right = WeylElement(sig, {(alpha, 0, 0, zero): ONE})
        result = result + multiply(left, right).scale(coeff.conjugate() * sign)
    return result


def is_hermitian(e: WeylElement) -> bool:
    return adjoint(e) == e


def adjoint_type(e: WeylElement) -> str:
    """Classify as "hermitian", "anti-hermitian" or "neither"."""
    dagger = adjoint(e)
    if dagger == e:
        return "hermitian"
    if dagger == -e:
        return "anti-hermitian"
    return "neither"


@dataclass(frozen=True)
class LinearMap:
    """Scalar-linear change of generators from ``source`` to ``target``.

    ``images`` maps every source generator name to an element of the target
    signature of degree at most one. Construction verifies that all canonical
    commutators are preserved.
    """

    source: AlgebraSignature
    target: AlgebraSignature
    images: Mapping[str, WeylElement]
    label: str = ""

    def __post_init__(self) -> None:
        if self.source.is_radial or self.target.is_radial:
            raise NonCanonicalMapError(
                "Substitution is defined for polynomial algebras"
            )
        missing = [n for n in self.source.generator_names if n not in self.images]
        if missing:
            raise NonCanonicalMapError(f"Map {self.label} misses generators {missing}")
        for name, image in self.images.items():
            if image.signature != self.target:
                raise NonCanonicalMapError(
                    f"Image of {name} is not in signature {self.target.name}"
                )
            if image.degree() > 1:
                raise NonCanonicalMapError(f"Image of {name} is not linear")
        self.check_canonical()

    def check_canonical(self) -> None:
        """Raise NonCanonicalMapError if any canonical commutator changes."""
        names = self.source.generator_names
        for i, g in enumerate(names):
            for h in names[i + 1 :]:
                expected = commutator(self.source.gen(g), self.source.gen(h))
                got = commutator(self.images[g], self.images[h])
                if got != self.target.constant(expected.constant_term()):
                    raise NonCanonicalMapError(
                        f"Map {self.describe()} breaks [{g}, {h}]: "
                        f"expected {expected}, got {got}"
                    )
        logger.debug(f"Canonical map verified: {self.describe()}")

    def describe(self) -> str:
        return self.label or f"{self.source.name}->{self.target.name}"

    @classmethod
    def identity(cls, sig: AlgebraSignature) -> LinearMap:
        return cls(sig, sig, {n: sig.gen(n) for n in sig.generator_names}, "identity")


def substitute(e: WeylElement, mapping: LinearMap) -> WeylElement:
    """Express ``e`` in the target generators of ``mapping``, renormal-ordered."""
    if e.signature != mapping.source:
        raise SignatureMismatchError(
            f"Element lives in {e.signature.name}, map expects {mapping.source.name}"
        )
    sig = mapping.source
    powers: dict[tuple[str, int], WeylElement] = {}

    def power(name: str, k: int) -> WeylElement:
        key = (name, k)
        if key not in powers:
            powers[key] = mapping.images[name] ** k
        return powers[key]

    result = mapping.target.zero()
    for (alpha, _, _, beta), coeff in e.items():
        term = mapping.target.one()
        for name, k in zip(sig.position_names, alpha):
            if k:
                term = multiply(term, power(name, k))
        for name, k in zip(sig.derivative_names, beta):
            if k:
                term = multiply(term, power(name, k))
        result = result + term.scale(coeff)
    return result


def compose(first: LinearMap, second: LinearMap) -> LinearMap:
    """Map applying ``first`` then ``second``."""
    images = {n: substitute(img, second) for n, img in first.images.items()}
    label = f"{first.label}+{second.label}"
    return LinearMap(first.source, second.target, images, label)


def linear_combination(
    sig: AlgebraSignature, pieces: Iterable[tuple[ScalarLike, str]]
) -> WeylElement:
    """Σ c·g for (c, generator-name) pairs."""
    result = sig.zero()
    for coeff, name in pieces:
        result = result + sig.gen(name).scale(coeff)
    return result


def _term_text(sig: AlgebraSignature, key: Monomial, coeff: Scalar) -> str:
    alpha, eps, m, beta = key
    factors = []
    for name, k in zip(sig.position_names, alpha):
        if k:
            factors.append(name if k == 1 else f"{name}^{k}")
    if eps:
        factors.append("r")
    if m:
        factors.append(f"(x2)^-{m}")
    for name, k in zip(sig.derivative_names, beta):
        if k:
            factors.append(name if k == 1 else f"{name}^{k}")
    if not factors:
        return str(coeff)
    return f"{coeff} * {' '.join(factors)}"
