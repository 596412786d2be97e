"""
Conformal generators from the Jordan triple product.

The complex Jordan algebra yields so(2,4) acting on Minkowski space by first
order differential operators, the real one so(2,3) on three-dimensional
space-time. Grades: −1 for translations, 0 for Lorentz and dilatation, +1 for
special conformal transformations.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import TYPE_CHECKING, Any, Callable, Optional, Sequence

import numpy as np
import sympy

from .check_record import CheckRecord, exact_family_check, make_record
from .errors import PhaseSpaceError
from .jordan import (
    JordanElement,
    JordanField,
    TripleConstants,
    computed_constants,
    triple_product,
)
from .lie import (
    MATRIX_OPS,
    WEYL_OPS,
    ClosureReport,
    LiePresentation,
    Pair,
    RuleStyle,
    closes_in_span,
    killing_signature,
    rank,
    structure_constants,
    verify_closure,
)
from .scalar import I, Scalar
from .weyl import AlgebraSignature, Monomial, WeylElement, commutator

if TYPE_CHECKING:
    from ..verify_config import SuiteConfig

logger = logging.getLogger(__name__)

SignPair = tuple[int, int]
SIGN_CANDIDATES: tuple[SignPair, ...] = ((1, 1), (1, -1), (-1, 1), (-1, -1))

# complex index → real index for generators free of the σ2 direction
REAL_RENAMING = {0: 0, 1: 1, 3: 2}

EXPECTED_KILLING = {3: (6, 4), 4: (8, 7)}


def field_for_dimension(dim: int) -> JordanField:
    if dim == 4:
        return JordanField.COMPLEX
    if dim == 3:
        return JordanField.REAL
    raise ValueError(f"Space-time dimension must be 3 or 4, got {dim}")


@lru_cache(maxsize=None)
def conformal_signature(dim: int) -> AlgebraSignature:
    """Positions x0..x{d-1} with derivatives d0..d{d-1} (lower index)."""
    return AlgebraSignature(
        f"conformal{dim}",
        tuple(f"x{k}" for k in range(dim)),
        tuple(f"d{k}" for k in range(dim)),
        adjoint_kind="real",
    )


def position_degree(e: WeylElement) -> int:
    return max((sum(key[0]) for key in e.terms), default=0)


@dataclass(frozen=True)
class ConformalGenerator:
    """One generator with its grade under the Euler operator."""

    label: str
    grade: int
    body: WeylElement

    @property
    def degree(self) -> int:
        """Polynomial degree of the coefficients; equals grade + 1."""
        return position_degree(self.body)

    def to_json(self) -> dict[str, Any]:
        return {"label": self.label, "grade": self.grade, "body": self.body.to_json()}


class _Builder:
    """Monomial bookkeeping for one space-time dimension."""

    def __init__(self, dim: int):
        self.dim = dim
        self.signature = conformal_signature(dim)
        self.metric = field_for_dimension(dim).metric

    def term(self, coeff: Any, xs: Sequence[int], ds: Sequence[int]) -> WeylElement:
        alpha = [0] * self.dim
        beta = [0] * self.dim
        for k in xs:
            alpha[k] += 1
        for k in ds:
            beta[k] += 1
        key: Monomial = (tuple(alpha), 0, 0, tuple(beta))
        return WeylElement(self.signature, {key: Scalar.coerce(coeff)})

    def g(self, mu: int) -> int:
        return self.metric[mu]

    def euler(self) -> WeylElement:
        """x^μ ∂_μ."""
        return sum(
            (self.term(1, [mu], [mu]) for mu in range(self.dim)),
            self.signature.zero(),
        )

    def x_squared(self) -> list[tuple[int, int]]:
        return [(self.g(nu), nu) for nu in range(self.dim)]


@dataclass
class ConformalAlgebra:
    """Generators built for one Jordan field."""

    field: JordanField
    signature: AlgebraSignature
    generators: dict[str, ConformalGenerator]
    _builder: _Builder = field(repr=False)

    @property
    def dim(self) -> int:
        return self.field.dimension

    def metric(self, mu: int) -> int:
        return self.field.metric[mu]

    def P(self, nu: int) -> WeylElement:  # noqa: N802
        return self.generators[f"P{nu}"].body

    def D(self) -> WeylElement:  # noqa: N802
        return self.generators["D"].body

    def K(self, mu: int) -> WeylElement:  # noqa: N802
        """K^μ (upper index)."""
        return self.generators[f"K{mu}"].body

    def K_lower(self, mu: int) -> WeylElement:  # noqa: N802
        return self.K(mu).scale(self.metric(mu))

    def M_lower(self, mu: int, nu: int) -> WeylElement:  # noqa: N802
        """M_μν = −i(x_ν∂_μ − x_μ∂_ν)."""
        b = self._builder
        body = b.term(b.g(nu), [nu], [mu]) - b.term(b.g(mu), [mu], [nu])
        return body.scale(-I)

    def M(self, mu: int, nu: int) -> WeylElement:  # noqa: N802
        """M^μ_ν."""
        return self.M_lower(mu, nu).scale(self.metric(mu))

    def euler(self) -> WeylElement:
        return self._builder.euler()

    def elements(self) -> list[WeylElement]:
        return [g.body for g in self.generators.values()]

    def labels(self) -> list[str]:
        return list(self.generators)

    def to_json(self) -> dict[str, Any]:
        return {
            "field": self.field.value,
            "generators": [g.to_json() for g in self.generators.values()],
        }


@lru_cache(maxsize=None)
def build_conformal(jordan_field: JordanField) -> ConformalAlgebra:
    """
    Conformal generators as differential operators.

    P_ν = i∂_ν, iM^μ_ν = −x^μ∂_ν + x_ν∂^μ, iD = x^μ∂_μ and
    iK^μ = −2x^μx^ν∂_ν + x²∂^μ. The complex field gives 15 generators, the
    real one 10.
    """
    dim = jordan_field.dimension
    b = _Builder(dim)
    gens: dict[str, ConformalGenerator] = {}
    for nu in range(dim):
        gens[f"P{nu}"] = ConformalGenerator(f"P{nu}", -1, b.term(I, [], [nu]))
    for mu in range(dim):
        for nu in range(mu + 1, dim):
            body = b.term(-1, [mu], [nu]) + b.term(b.g(nu) * b.g(mu), [nu], [mu])
            gens[f"M{mu}{nu}"] = ConformalGenerator(f"M{mu}{nu}", 0, body.scale(-I))
    gens["D"] = ConformalGenerator("D", 0, b.euler().scale(-I))
    for mu in range(dim):
        body = sum(
            (b.term(-2, [mu, nu], [nu]) for nu in range(dim)), b.signature.zero()
        )
        for sign, nu in b.x_squared():
            body = body + b.term(sign * b.g(mu), [nu, nu], [mu])
        gens[f"K{mu}"] = ConformalGenerator(f"K{mu}", 1, body.scale(-I))
    logger.debug(f"Built {len(gens)} conformal generators for {jordan_field.value}")
    return ConformalAlgebra(jordan_field, b.signature, gens, b)


def generator_table_json(jordan_field: JordanField) -> dict[str, Any]:
    return build_conformal(jordan_field).to_json()


# ----------------------------------------------------------------------
# Table operators from the triple product
# ----------------------------------------------------------------------


class TableOperators:
    """U_a = a·∂, S_a^b = (a,b,x)^β∂_β and U^b = −(x,b,x)^β∂_β."""

    def __init__(self, jordan_field: JordanField):
        self.field = jordan_field
        self.dim = jordan_field.dimension
        self.constants: TripleConstants = computed_constants(jordan_field)
        self._b = _Builder(self.dim)
        self.signature = self._b.signature

    def basis(self, mu: int) -> JordanElement:
        return JordanElement.basis(self.field, mu)

    def u_lower(self, a: JordanElement) -> WeylElement:
        terms: dict[Monomial, Scalar] = {}
        for mu, c in enumerate(a.coords):
            if c:
                self._accumulate(terms, c, (), (mu,))
        return WeylElement(self._b.signature, terms)

    def s(self, a: JordanElement, b: JordanElement) -> WeylElement:
        terms: dict[Monomial, Scalar] = {}
        n = self.dim
        for al, be, ga, rho in product(range(n), repeat=4):
            coeff = a.coords[al] * b.coords[be]
            if coeff:
                value = self.constants.entry(al, be, ga, rho)
                if value:
                    self._accumulate(terms, coeff * value, (ga,), (rho,))
        return WeylElement(self._b.signature, terms)

    def u_upper(self, b: JordanElement) -> WeylElement:
        terms: dict[Monomial, Scalar] = {}
        n = self.dim
        for al, be, ga, rho in product(range(n), repeat=4):
            if b.coords[be]:
                value = self.constants.entry(al, be, ga, rho)
                if value:
                    self._accumulate(terms, -b.coords[be] * value, (al, ga), (rho,))
        return WeylElement(self._b.signature, terms)

    def _accumulate(
        self,
        terms: dict[Monomial, Scalar],
        coeff: Fraction,
        xs: Sequence[int],
        ds: Sequence[int],
    ) -> None:
        alpha = [0] * self.dim
        beta = [0] * self.dim
        for k in xs:
            alpha[k] += 1
        for k in ds:
            beta[k] += 1
        key: Monomial = (tuple(alpha), 0, 0, tuple(beta))
        terms[key] = terms.get(key, Scalar(0)) + Scalar(coeff)


@dataclass
class _Relation:
    name: str
    description: str
    instances: list[tuple[WeylElement, WeylElement]]
    lhs_weight: Callable[[int, int], int]
    rhs_weight: Callable[[int, int], int]

    def realized(self, signs: SignPair) -> list[tuple[WeylElement, WeylElement]]:
        lw = self.lhs_weight(*signs)
        rw = self.rhs_weight(*signs)
        return [(lhs.scale(lw), rhs.scale(rw)) for lhs, rhs in self.instances]

    def passes(self, signs: SignPair) -> int:
        return sum(1 for lhs, rhs in self.realized(signs) if lhs == rhs)


def _tkk_relations(ops: TableOperators) -> list[_Relation]:
    n = ops.dim
    e = [ops.basis(mu) for mu in range(n)]
    u = [ops.u_lower(x) for x in e]
    v = [ops.u_upper(x) for x in e]
    s = {(a, b): ops.s(e[a], e[b]) for a in range(n) for b in range(n)}

    uu, vv, uv, su, sv, ss = [], [], [], [], [], []
    for a in range(n):
        for b in range(n):
            uu.append((commutator(u[a], u[b]), ops.signature.zero()))
            vv.append((commutator(v[a], v[b]), ops.signature.zero()))
            uv.append((commutator(u[a], v[b]), s[(a, b)].scale(-2)))
            for c in range(n):
                abc = triple_product(e[a], e[b], e[c])
                bac = triple_product(e[b], e[a], e[c])
                su.append((commutator(s[(a, b)], u[c]), ops.u_lower(abc)))
                sv.append((commutator(s[(a, b)], v[c]), -ops.u_upper(bac)))
                for d in range(n):
                    bad = triple_product(e[b], e[a], e[d])
                    ss.append(
                        (
                            commutator(s[(a, b)], s[(c, d)]),
                            ops.s(abc, e[d]) - ops.s(e[c], bad),
                        )
                    )
    return [
        _Relation("u-u", "[U_a, U_b] = 0", uu, lambda es, ev: 1, lambda es, ev: 1),
        _Relation("v-v", "[U^a, U^b] = 0", vv, lambda es, ev: 1, lambda es, ev: 1),
        _Relation(
            "u-v", "[U_a, U^b] = -2 S_a^b", uv, lambda es, ev: ev, lambda es, ev: es
        ),
        _Relation(
            "s-u", "[S_a^b, U_c] = U_(abc)", su, lambda es, ev: es, lambda es, ev: 1
        ),
        _Relation(
            "s-v",
            "[S_a^b, U^c] = -U^(bac)",
            sv,
            lambda es, ev: es * ev,
            lambda es, ev: ev,
        ),
        _Relation(
            "s-s",
            "[S_a^b, S_c^d] = S_(abc)^d - S_c^(bad)",
            ss,
            lambda es, ev: 1,
            lambda es, ev: es,
        ),
    ]


@dataclass
class TKKReport:
    """Fitted realization signs (ε_S, ε_V) and per-relation records."""

    field: JordanField
    signs: SignPair
    records: list[CheckRecord]

    @property
    def passed(self) -> bool:
        return all(not r.failed for r in self.records)


def verify_tkk_relations(
    jordan_field: JordanField = JordanField.COMPLEX,
) -> TKKReport:
    """
    Abstract TKK relations for all basis index combinations.

    U_a is kept as printed; S_a^b and U^b are multiplied by signs fitted over
    {±1}². The literal table (both signs +1) is recorded separately.
    """
    ops = TableOperators(jordan_field)
    relations = _tkk_relations(ops)
    best = max(
        SIGN_CANDIDATES,
        key=lambda signs: sum(r.passes(signs) for r in relations),
    )
    logger.info(f"TKK realization signs ({jordan_field.value}): {best}")
    notes = {"sign_s": best[0], "sign_v": best[1]}
    records = []
    for relation in relations:
        records.append(
            exact_family_check(
                f"tkk.{jordan_field.value}.relation.{relation.name}",
                relation.description,
                relation.realized(best),
                notes=notes,
            )
        )
        records.append(
            exact_family_check(
                f"tkk.printed-signs.{jordan_field.value}.{relation.name}",
                f"{relation.description} for the literal table operators",
                relation.realized((1, 1)),
            )
        )
    return TKKReport(jordan_field, best, records)


def table_records(jordan_field: JordanField) -> list[CheckRecord]:
    """Table operators against the conformal generators."""
    alg = build_conformal(jordan_field)
    ops = TableOperators(jordan_field)
    n = alg.dim
    tag = jordan_field.value
    e = [ops.basis(mu) for mu in range(n)]
    s_table = {
        (mu, nu): ops.s(e[nu], e[mu]).scale(-I) for mu in range(n) for nu in range(n)
    }
    delta_d = {
        (mu, nu): alg.D() if mu == nu else alg.signature.zero()
        for mu in range(n)
        for nu in range(n)
    }
    return [
        exact_family_check(
            f"tkk.{tag}.u-equals-minus-i-p",
            "U_a = -i a^mu P_mu",
            [(ops.u_lower(e[mu]), alg.P(mu).scale(-I)) for mu in range(n)],
        ),
        exact_family_check(
            f"tkk.{tag}.k-table",
            "i Sigma^{mu b}_{n a} x^n x^a d_b = K^mu",
            [(ops.u_upper(e[mu]).scale(-I), alg.K(mu)) for mu in range(n)],
        ),
        exact_family_check(
            f"tkk.{tag}.s-equals-delta-d-minus-m",
            "S^mu_nu = delta^mu_nu D - M^mu_nu",
            [(s_table[k], delta_d[k] - alg.M(*k)) for k in s_table],
        ),
        exact_family_check(
            f"tkk.printed.s-equals-m-minus-delta-d.{tag}",
            "S^mu_nu = M^mu_nu - delta^mu_nu D",
            [(s_table[k], alg.M(*k) - delta_d[k]) for k in s_table],
        ),
        exact_family_check(
            f"tkk.{tag}.k-p-gives-s",
            "(i/2)[K^mu, P_nu] = M^mu_nu - delta^mu_nu D",
            [
                (
                    commutator(alg.K(mu), alg.P(nu)).scale(I * Scalar(Fraction(1, 2))),
                    alg.M(mu, nu) - delta_d[(mu, nu)],
                )
                for mu in range(n)
                for nu in range(n)
            ],
        ),
    ]


# ----------------------------------------------------------------------
# Conformal algebra relations
# ----------------------------------------------------------------------


def lorentz_presentation(dim: int) -> LiePresentation:
    jf = field_for_dimension(dim)
    return LiePresentation(
        f"so(1,{dim - 1})", tuple(range(dim)), jf.metric, RuleStyle.CONF_PLUS
    )


def verify_conformal_relations(dim: int) -> list[CheckRecord]:
    """Brackets of P, M, D, K in the lower-index form."""
    alg = build_conformal(field_for_dimension(dim))
    n = alg.dim
    zero = alg.signature.zero()
    idx = range(n)
    prefix = f"tkk.conformal{dim}"

    def delta_d(mu: int, nu: int) -> WeylElement:
        return alg.D().scale(alg.metric(mu)) if mu == nu else zero

    records = [
        exact_family_check(
            f"{prefix}.d-p",
            "[D, P_mu] = i P_mu",
            [(commutator(alg.D(), alg.P(mu)), alg.P(mu).scale(I)) for mu in idx],
        ),
        exact_family_check(
            f"{prefix}.d-k",
            "[D, K_mu] = -i K_mu",
            [
                (commutator(alg.D(), alg.K_lower(mu)), alg.K_lower(mu).scale(-I))
                for mu in idx
            ],
        ),
        exact_family_check(
            f"{prefix}.k-p",
            "[K_mu, P_nu] = 2i(g_mu_nu D - M_mu_nu)",
            [
                (
                    commutator(alg.K_lower(mu), alg.P(nu)),
                    (delta_d(mu, nu) - alg.M_lower(mu, nu)).scale(I * 2),
                )
                for mu in idx
                for nu in idx
            ],
        ),
        exact_family_check(
            f"{prefix}.p-p",
            "[P_mu, P_nu] = 0",
            [(commutator(alg.P(mu), alg.P(nu)), zero) for mu in idx for nu in idx],
        ),
        exact_family_check(
            f"{prefix}.k-k",
            "[K_mu, K_nu] = 0",
            [(commutator(alg.K(mu), alg.K(nu)), zero) for mu in idx for nu in idx],
        ),
        exact_family_check(
            f"{prefix}.d-m",
            "[D, M_mu_nu] = 0",
            [
                (commutator(alg.D(), alg.M_lower(mu, nu)), zero)
                for mu in idx
                for nu in idx
            ],
        ),
        exact_family_check(
            f"{prefix}.m-p",
            "[M_mu_nu, P_rho] = i(g_nu_rho P_mu - g_mu_rho P_nu)",
            _vector_action(alg, alg.P),
        ),
        exact_family_check(
            f"{prefix}.m-k",
            "[M_mu_nu, K_rho] = i(g_nu_rho K_mu - g_mu_rho K_nu)",
            _vector_action(alg, alg.K_lower),
        ),
    ]

    presentation = lorentz_presentation(dim)
    lorentz = {(mu, nu): alg.M_lower(mu, nu) for mu, nu in presentation.pairs()}
    report = verify_closure(lorentz, presentation, WEYL_OPS)
    records.append(
        make_record(
            f"{prefix}.lorentz",
            f"M_mu_nu close as {presentation.name}",
            report.passed,
            residual=report.max_residual,
            notes={"sign": report.sign, "rule": presentation.style.value},
        )
    )
    return records


def _vector_action(
    alg: ConformalAlgebra, vector: Callable[[int], WeylElement]
) -> list[tuple[WeylElement, WeylElement]]:
    n = alg.dim
    out = []
    for mu, nu, rho in product(range(n), repeat=3):
        if mu == nu:
            continue
        expected = alg.signature.zero()
        if nu == rho:
            expected = expected + vector(mu).scale(alg.metric(nu))
        if mu == rho:
            expected = expected - vector(nu).scale(alg.metric(mu))
        out.append((commutator(alg.M_lower(mu, nu), vector(rho)), expected.scale(I)))
    return out


def grading_check(
    jordan_field: JordanField = JordanField.COMPLEX,
) -> list[CheckRecord]:
    """[iD, g] = grade·g for every generator, plus grade additivity of brackets."""
    alg = build_conformal(jordan_field)
    euler = alg.euler()
    tag = jordan_field.value
    pairs = [
        (commutator(euler, g.body), g.body.scale(g.grade))
        for g in alg.generators.values()
    ]
    additive = []
    gens = list(alg.generators.values())
    for i, g in enumerate(gens):
        for h in gens[i + 1 :]:
            bracket = commutator(g.body, h.body)
            total = g.grade + h.grade
            if abs(total) > 1:
                additive.append((bracket, alg.signature.zero()))
            else:
                additive.append((commutator(euler, bracket), bracket.scale(total)))
    degrees_ok = all(g.degree == g.grade + 1 for g in gens)
    return [
        exact_family_check(f"tkk.{tag}.grading", "[x.d, g] = k g", pairs),
        exact_family_check(
            f"tkk.{tag}.grade-additivity",
            "[g_i, g_j] has grade i + j, vanishing beyond +-1",
            additive,
        ),
        make_record(
            f"tkk.{tag}.coefficient-degree",
            "coefficient degree equals grade + 1",
            degrees_ok,
            notes={g.label: g.degree for g in gens},
        ),
    ]


def algebra_records(jordan_field: JordanField) -> list[CheckRecord]:
    """Closure, dimension and Killing signature of the generator set."""
    alg = build_conformal(jordan_field)
    elements = alg.elements()
    tag = jordan_field.value
    expected_dim = 15 if jordan_field is JordanField.COMPLEX else 10
    dimension = rank([WEYL_OPS.coordinates(e) for e in elements])
    records = [
        make_record(
            f"tkk.{tag}.closure",
            "no bracket leaves the span of the generators",
            closes_in_span(elements, WEYL_OPS),
        ),
        make_record(
            f"tkk.{tag}.dimension",
            f"generators span a {expected_dim}-dimensional space",
            dimension == expected_dim,
            notes={"rank": dimension},
        ),
    ]
    sc = structure_constants(elements, alg.labels(), WEYL_OPS)
    signature = killing_signature(sc)
    expected = EXPECTED_KILLING[alg.dim]
    records.append(
        make_record(
            f"tkk.{tag}.killing-signature",
            f"Killing form signature is {expected}",
            signature == expected,
            notes={"signature": list(signature)},
        )
    )
    return records


def restrict_to_slice(e: WeylElement, target: AlgebraSignature) -> WeylElement:
    """Set x2 = 0, drop ∂_2 terms and rename index 3 to 2."""
    keep = sorted(REAL_RENAMING)
    terms: dict[Monomial, Scalar] = {}
    for (alpha, eps, m, beta), coeff in e.items():
        if alpha[2] or beta[2]:
            continue
        key = (tuple(alpha[k] for k in keep), eps, m, tuple(beta[k] for k in keep))
        terms[key] = coeff
    return WeylElement(target, terms)


def _rename_label(label: str) -> Optional[str]:
    head, digits = label[0], label[1:]
    if any(int(c) not in REAL_RENAMING for c in digits):
        return None
    return head + "".join(str(REAL_RENAMING[int(c)]) for c in digits)


def restriction_record() -> CheckRecord:
    """Real generators equal the σ2-free complex ones restricted to x2 = 0."""
    complex_alg = build_conformal(JordanField.COMPLEX)
    real_alg = build_conformal(JordanField.REAL)
    pairs = []
    matched = set()
    for label, gen in complex_alg.generators.items():
        renamed = _rename_label(label)
        if renamed is None:
            continue
        matched.add(renamed)
        pairs.append(
            (
                restrict_to_slice(gen.body, real_alg.signature),
                real_alg.generators[renamed].body,
            )
        )
    record = exact_family_check(
        "tkk.restriction.real-equals-complex-slice",
        "sigma2-free complex generators restricted to x2 = 0 equal the real set",
        pairs,
    )
    if matched != set(real_alg.generators):
        record = make_record(
            record.id,
            record.description,
            False,
            notes={"unmatched": sorted(set(real_alg.generators) - matched)},
        )
    return record


# ----------------------------------------------------------------------
# Ambient so(2,d) and the null cone
# ----------------------------------------------------------------------


def ambient_presentation(dim: int) -> LiePresentation:
    """Indices −1, 0..3 (and 5 for d = 4); metric (+, +, −, ...)."""
    if dim == 3:
        indices: tuple[int, ...] = (-1, 0, 1, 2, 3)
    elif dim == 4:
        indices = (-1, 0, 1, 2, 3, 5)
    else:
        raise ValueError(f"Space-time dimension must be 3 or 4, got {dim}")
    metric = (1, 1) + (-1,) * (len(indices) - 2)
    return LiePresentation(f"so(2,{dim})", indices, metric, RuleStyle.CONF_PLUS)


@dataclass(frozen=True)
class AmbientGenerator:
    """L_AB = i(e_A e_Bᵀ − e_B e_Aᵀ)η."""

    indices: Pair
    body: sympy.Matrix

    def is_eta_antisymmetric(self, eta: sympy.Matrix) -> bool:
        return (self.body.T * eta + eta * self.body).is_zero_matrix


@dataclass
class AmbientRepresentation:
    presentation: LiePresentation
    generators: dict[Pair, AmbientGenerator]
    closure: ClosureReport

    @property
    def eta(self) -> sympy.Matrix:
        return sympy.diag(*self.presentation.metric)

    def matrices(self) -> dict[Pair, sympy.Matrix]:
        return {p: g.body for p, g in self.generators.items()}


@lru_cache(maxsize=None)
def ambient_representation(dim: int) -> AmbientRepresentation:
    """Fundamental matrices of so(2,d), checked against the conf+ rule."""
    pres = ambient_presentation(dim)
    size = len(pres.indices)
    eta = sympy.diag(*pres.metric)
    gens = {}
    for a, b in pres.pairs():
        ia, ib = pres.indices.index(a), pres.indices.index(b)
        unit = sympy.zeros(size, size)
        unit[ia, ib] = 1
        unit[ib, ia] = -1
        body = (sympy.I * unit * eta).applyfunc(sympy.expand)
        gens[(a, b)] = AmbientGenerator((a, b), body)
    closure = verify_closure(
        {p: g.body for p, g in gens.items()}, pres, MATRIX_OPS, sign=None
    )
    logger.debug(f"Ambient {pres.name}: sign {closure.sign}, passed {closure.passed}")
    return AmbientRepresentation(pres, gens, closure)


def cone_point(y: Sequence[Fraction], dim: int) -> sympy.Matrix:
    """Null vector ((1 − y²)/2, y, (1 + y²)/2) over a space-time point."""
    metric = field_for_dimension(dim).metric
    y2 = sum((g * c * c for g, c in zip(metric, y)), Fraction(0))
    values = [(1 - y2) / 2, *y, (1 + y2) / 2]
    return sympy.Matrix([sympy.Rational(v.numerator, v.denominator) for v in values])


def ambient_records(dim: int, samples: int, seed: int) -> list[CheckRecord]:
    rep = ambient_representation(dim)
    eta = rep.eta
    prefix = f"tkk.ambient{dim}"
    rng = np.random.default_rng(seed)
    points = [
        cone_point([Fraction(int(v)) for v in row], dim)
        for row in rng.integers(-5, 6, size=(samples, dim))
    ]
    fixed = sympy.Matrix([1] + [0] * dim + [1])
    points.append(fixed)
    null_ok = all((p.T * eta * p)[0] == 0 for p in points)
    tangent_bad = [
        (pair, list(p))
        for pair, gen in rep.generators.items()
        for p in points
        if sympy.expand((p.T * (gen.body.T * eta + eta * gen.body) * p)[0]) != 0
    ]
    return [
        make_record(
            f"{prefix}.closure",
            f"L_AB satisfy the {rep.presentation.style.value} rule",
            rep.closure.passed,
            residual=rep.closure.max_residual,
            notes={"sign": rep.closure.sign, "brackets": len(rep.closure.checks)},
        ),
        make_record(
            f"{prefix}.eta-antisymmetric",
            "T^T eta + eta T = 0 for every generator",
            all(g.is_eta_antisymmetric(eta) for g in rep.generators.values()),
        ),
        make_record(
            f"{prefix}.cone-points",
            "sample points lie on the null cone",
            null_ok,
            notes={"samples": len(points)},
        ),
        make_record(
            f"{prefix}.cone-tangent",
            "first-order variation of the quadratic form vanishes on the cone",
            not tangent_bad,
            notes={"first_failure": str(tangent_bad[0]) if tangent_bad else None},
        ),
    ]


def delete_index(
    rep: AmbientRepresentation, index: int, renaming: dict[int, int]
) -> dict[Pair, sympy.Matrix]:
    """Generators not involving ``index``, as submatrices with renamed indices."""
    pos = rep.presentation.indices.index(index)
    out = {}
    for (a, b), gen in rep.generators.items():
        if index in (a, b):
            continue
        sub = gen.body.copy()
        sub.row_del(pos)
        sub.col_del(pos)
        out[(renaming[a], renaming[b])] = sub
    return out


AMBIENT_RENAMING = {-1: -1, 0: 0, 1: 1, 3: 2, 5: 3}


def reduction_records() -> list[CheckRecord]:
    """Both routes from so(2,4) to so(2,3) and their Killing signatures."""
    big = ambient_representation(4)
    small = ambient_representation(3)
    reduced = delete_index(big, 2, AMBIENT_RENAMING)
    target = small.matrices()
    coincide = set(reduced) == set(target) and all(
        reduced[p] == target[p] for p in target
    )
    labels = [f"L{a}{b}" for a, b in reduced]
    ambient_sig = killing_signature(
        structure_constants(list(reduced.values()), labels, MATRIX_OPS)
    )
    real = build_conformal(JordanField.REAL)
    conformal_sig = killing_signature(
        structure_constants(real.elements(), real.labels(), WEYL_OPS)
    )
    return [
        make_record(
            "tkk.reduction.ambient-index-2",
            "deleting ambient index 2 and renaming 3 -> 2, 5 -> 3 "
            "gives the so(2,3) matrices",
            coincide,
        ),
        make_record(
            "tkk.reduction.isomorphic",
            "ambient deletion and sigma2 deletion give algebras "
            "with equal Killing signature",
            ambient_sig == conformal_sig == EXPECTED_KILLING[3],
            notes={
                "ambient_deletion": list(ambient_sig),
                "sigma2_deletion": list(conformal_sig),
                "same_index": 2,
            },
        ),
    ]


# ----------------------------------------------------------------------
# Conformal inversion
# ----------------------------------------------------------------------


def invert(point: Sequence[Any], dim: int = 4) -> tuple[Fraction, ...]:
    """
    I(x^0, x) = (x^0/x², −x/x²).

    Raises:
        PhaseSpaceError: for points on the light cone x² = 0
    """
    metric = field_for_dimension(dim).metric
    x = [Fraction(c) for c in point]
    x2 = sum((g * c * c for g, c in zip(metric, x)), Fraction(0))
    if x2 == 0:
        raise PhaseSpaceError(f"Inversion is undefined on the light cone: {point}")
    return tuple(g * c / x2 for g, c in zip(metric, x))


def _apply_to_function(
    e: WeylElement, f: sympy.Expr, symbols: Sequence[sympy.Symbol]
) -> sympy.Expr:
    total = sympy.Integer(0)
    for (alpha, _, _, beta), coeff in e.items():
        term = f
        for s, k in zip(symbols, beta):
            if k:
                term = sympy.diff(term, s, k)
        for s, k in zip(symbols, alpha):
            if k:
                term = term * s**k
        total += coeff.to_sympy() * term
    return sympy.expand(total)


def probe_functions(symbols: Sequence[sympy.Symbol]) -> list[sympy.Expr]:
    x0, x1, x2, x3 = symbols
    return [x0 * x1, x0**2 + x2 * x3, x1**3 - x0 * x2 * x3]


@dataclass
class InversionReport:
    ratio: Optional[Scalar]
    samples: int
    involution_ok: bool
    rejected: int = 0
    mismatches: list[str] = field(default_factory=list)


def inversion_check(samples: int, seed: int) -> InversionReport:
    """
    Compare K^μ f with I∘P_μ∘I f at rational points for test polynomials.

    (I f)(x) = f(I(x)). A single constant c with K^μ f = c·(I P_μ I f) at every
    sample is fitted; points on the cone are skipped.
    """
    alg = build_conformal(JordanField.COMPLEX)
    xs = sympy.symbols("x0:4")
    metric = JordanField.COMPLEX.metric
    x2 = sum(g * s**2 for g, s in zip(metric, xs))
    inversion = {s: g * s / x2 for g, s in zip(metric, xs)}
    rng = np.random.default_rng(seed)
    points: list[tuple[Fraction, ...]] = []
    rejected = 0
    while len(points) < samples:
        row = tuple(Fraction(int(v)) for v in rng.integers(-5, 6, size=4))
        try:
            invert(row)
        except PhaseSpaceError:
            rejected += 1
            continue
        points.append(row)
    involution_ok = all(invert(invert(p)) == p for p in points)

    ratio: Optional[Scalar] = None
    consistent = True
    mismatches: list[str] = []
    for f in probe_functions(xs):
        inverted = f.xreplace(inversion)
        for mu in range(4):
            kf = _apply_to_function(alg.K(mu), f, xs)
            ipi = (sympy.I * sympy.diff(inverted, xs[mu])).xreplace(inversion)
            for p in points:
                at = {
                    s: sympy.Rational(v.numerator, v.denominator)
                    for s, v in zip(xs, p)
                }
                left = Scalar.from_sympy(kf.xreplace(at))
                right = Scalar.from_sympy(ipi.xreplace(at))
                if right.is_zero():
                    if not left.is_zero():
                        consistent = False
                        mismatches.append(f"K{mu} f={f} at {p}")
                    continue
                c = left / right
                if ratio is None:
                    ratio = c
                elif c != ratio:
                    consistent = False
                    mismatches.append(f"K{mu} f={f} at {p}: ratio {c}")
    if not consistent:
        ratio = None
    return InversionReport(ratio, len(points), involution_ok, rejected, mismatches[:5])


def inversion_records(samples: int, seed: int) -> list[CheckRecord]:
    report = inversion_check(samples, seed)
    notes = {"samples": report.samples, "rejected_on_cone": report.rejected}
    ratio_text = str(report.ratio) if report.ratio is not None else None
    return [
        make_record(
            "tkk.inversion.involution",
            "I(I(x)) = x at every sample",
            report.involution_ok,
            notes=notes,
        ),
        make_record(
            "tkk.inversion.k-equals-ipi",
            "K^mu = c I P_mu I with one constant c",
            report.ratio is not None and report.ratio in (Scalar(1), Scalar(-1)),
            notes={**notes, "c": ratio_text, "mismatches": report.mismatches},
        ),
        make_record(
            "tkk.printed.k-equals-ipi",
            "K^mu = I P_mu I",
            report.ratio == Scalar(1),
            notes={**notes, "c": ratio_text},
        ),
    ]


def run_checks(settings: SuiteConfig) -> list[CheckRecord]:
    """Full conformal suite."""
    records: list[CheckRecord] = []
    for jf in (JordanField.COMPLEX, JordanField.REAL):
        records.extend(verify_tkk_relations(jf).records)
        records.extend(table_records(jf))
        records.extend(grading_check(jf))
        records.extend(algebra_records(jf))
        records.extend(verify_conformal_relations(jf.dimension))
    records.append(restriction_record())
    for dim in (3, 4):
        records.extend(ambient_records(dim, settings.trials, settings.seed))
    records.extend(reduction_records())
    records.extend(inversion_records(min(settings.trials, 16), settings.seed))
    return records
