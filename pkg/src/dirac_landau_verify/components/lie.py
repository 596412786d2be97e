"""
Lie-algebra bookkeeping for antisymmetric generator tables.

A ``LiePresentation`` fixes an index set, a diagonal metric and a commutator
rule. Generator tables map index pairs to elements of any algebra for which an
``ElementOps`` adapter supplies the bracket and a coordinate view; closure,
span decomposition and structure constants are computed in coordinates with
exact ``Scalar`` arithmetic.
"""

from __future__ import annotations

import logging
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Generic, Optional, TypeVar

import numpy as np
import sympy

from .scalar import I, ZERO, Scalar
from .weyl import WeylElement, commutator

logger = logging.getLogger(__name__)

E = TypeVar("E")
Pair = tuple[int, int]
Coordinates = dict[Hashable, Scalar]


class RuleStyle(str, Enum):
    """Right-hand side conventions for [g_ab, g_cd].

    co:    −i(η_bc g_ad + η_ad g_bc − η_ac g_bd − η_bd g_ac)
    conf+: −i(η_ac g_bd + η_bd g_ac − η_ad g_bc − η_bc g_ad)
    """

    CO = "co"
    CONF_PLUS = "conf+"


@dataclass(frozen=True)
class LiePresentation:
    """Index set, diagonal metric and commutator rule."""

    name: str
    indices: tuple[int, ...]
    metric: tuple[int, ...]
    style: RuleStyle

    def __post_init__(self) -> None:
        if len(self.indices) != len(self.metric):
            raise ValueError(f"{self.name}: metric length does not match indices")
        if any(v not in (1, -1) for v in self.metric):
            raise ValueError(f"{self.name}: metric entries must be ±1")

    def eta(self, a: int, b: int) -> int:
        if a != b:
            return 0
        return self.metric[self.indices.index(a)]

    def pairs(self) -> list[Pair]:
        """Canonical pairs (a, b) with a before b in index order."""
        return [
            (a, b)
            for i, a in enumerate(self.indices)
            for b in self.indices[i + 1 :]
        ]

    def canonical(self, a: int, b: int) -> tuple[Optional[Pair], int]:
        """Canonical pair and sign for g_ab; (None, 0) when a == b."""
        if a == b:
            return None, 0
        if self.indices.index(a) < self.indices.index(b):
            return (a, b), 1
        return (b, a), -1

    def expected(self, ab: Pair, cd: Pair) -> dict[Pair, int]:
        """Integer coefficients c_p with [g_ab, g_cd] = −i Σ c_p g_p."""
        a, b = ab
        c, d = cd
        if self.style is RuleStyle.CO:
            terms = [
                (self.eta(b, c), a, d),
                (self.eta(a, d), b, c),
                (-self.eta(a, c), b, d),
                (-self.eta(b, d), a, c),
            ]
        else:
            terms = [
                (self.eta(a, c), b, d),
                (self.eta(b, d), a, c),
                (-self.eta(a, d), b, c),
                (-self.eta(b, c), a, d),
            ]
        out: dict[Pair, int] = {}
        for weight, x, y in terms:
            if not weight:
                continue
            pair, sign = self.canonical(x, y)
            if pair is None:
                continue
            out[pair] = out.get(pair, 0) + weight * sign
        return {p: v for p, v in out.items() if v}

    def label(self, pair: Pair, prefix: str = "m") -> str:
        return f"{prefix}{pair[0]}{pair[1]}"


@dataclass(frozen=True)
class ElementOps(Generic[E]):
    """Adapter giving the closure machinery a bracket and coordinates."""

    bracket: Callable[[E, E], E]
    coordinates: Callable[[E], Coordinates]
    render: Callable[[E], str] = str


def _weyl_coordinates(e: WeylElement) -> Coordinates:
    return dict(e.terms)


def _matrix_bracket(a: sympy.Matrix, b: sympy.Matrix) -> sympy.Matrix:
    return (a * b - b * a).applyfunc(sympy.expand)


def _matrix_coordinates(m: Any) -> Coordinates:
    out: Coordinates = {}
    rows, cols = m.shape
    for i in range(rows):
        for j in range(cols):
            value = sympy.expand(m[i, j])
            if value != 0:
                out[(i, j)] = Scalar.from_sympy(value)
    return out


WEYL_OPS: ElementOps[WeylElement] = ElementOps(
    commutator, _weyl_coordinates, lambda e: e.to_text()
)
MATRIX_OPS: ElementOps[Any] = ElementOps(_matrix_bracket, _matrix_coordinates)


def _axpy(
    target: Coordinates, factor: Scalar, source: Mapping[Hashable, Scalar]
) -> None:
    for key, value in source.items():
        updated = target.get(key, ZERO) + factor * value
        if updated.is_zero():
            target.pop(key, None)
        else:
            target[key] = updated


def max_residual(coords: Mapping[Hashable, Scalar]) -> float:
    return max((v.magnitude() for v in coords.values()), default=0.0)


@dataclass
class BracketCheck:
    """One [g_ab, g_cd] comparison."""

    left: Pair
    right: Pair
    expected: dict[Pair, int]
    residual: float
    passed: bool
    bracket_text: str = ""


@dataclass
class ClosureReport:
    """Outcome of checking all pairwise brackets against a presentation."""

    presentation: str
    sign: int
    checks: list[BracketCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[BracketCheck]:
        return [c for c in self.checks if not c.passed]

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)


def verify_closure(
    generators: Mapping[Pair, E],
    presentation: LiePresentation,
    ops: ElementOps[E],
    sign: Optional[int] = None,
) -> ClosureReport:
    """
    Check [g_ab, g_cd] = −i·s·(rule) for every unordered pair of generators.

    Args:
        generators: Element for every canonical pair of the presentation
        presentation: Index set, metric and rule
        ops: Element adapter
        sign: Fixed global sign, or None to fit one sign over all pairs

    Returns:
        ClosureReport with the chosen sign and one check per generator pair
    """
    pairs = presentation.pairs()
    missing = [p for p in pairs if p not in generators]
    if missing:
        raise ValueError(f"Generators missing for pairs {missing}")
    coords = {p: ops.coordinates(generators[p]) for p in pairs}

    computed = []
    for i, ab in enumerate(pairs):
        for cd in pairs[i + 1 :]:
            bracket = ops.bracket(generators[ab], generators[cd])
            computed.append(
                (ab, cd, ops.coordinates(bracket), presentation.expected(ab, cd))
            )

    candidates = [sign] if sign is not None else [1, -1]
    best: Optional[ClosureReport] = None
    for s in candidates:
        report = ClosureReport(presentation.name, s)
        for ab, cd, bracket_coords, expected in computed:
            residual = dict(bracket_coords)
            for pair, weight in expected.items():
                _axpy(residual, I * s * weight, coords[pair])
            size = max_residual(residual)
            report.checks.append(
                BracketCheck(ab, cd, expected, size, not residual)
            )
        if best is None or len(report.failures) < len(best.failures):
            best = report
        if report.passed:
            break
    assert best is not None
    logger.debug(
        f"Closure {presentation.name}: sign {best.sign}, "
        f"{len(best.failures)} failures of {len(best.checks)}"
    )
    return best


# ----------------------------------------------------------------------
# Exact linear algebra over Scalar
# ----------------------------------------------------------------------


def _row_echelon(
    rows: list[list[Scalar]], rhs: Optional[list[Scalar]] = None
) -> list[int]:
    """In-place forward elimination; returns the free column indices."""
    free: list[int] = []
    if not rows:
        return free
    n_rows, n_cols = len(rows), len(rows[0])
    piv_r = 0
    for piv_c in range(n_cols):
        pivot = next(
            (r for r in range(piv_r, n_rows) if not rows[r][piv_c].is_zero()), None
        )
        if pivot is None:
            free.append(piv_c)
            continue
        if pivot != piv_r:
            rows[piv_r], rows[pivot] = rows[pivot], rows[piv_r]
            if rhs is not None:
                rhs[piv_r], rhs[pivot] = rhs[pivot], rhs[piv_r]
        inv = rows[piv_r][piv_c].inverse()
        for r in range(piv_r + 1, n_rows):
            fr = rows[r][piv_c]
            if fr.is_zero():
                continue
            factor = fr * inv
            for c in range(piv_c, n_cols):
                rows[r][c] = rows[r][c] - rows[piv_r][c] * factor
            if rhs is not None:
                rhs[r] = rhs[r] - rhs[piv_r] * factor
        piv_r += 1
    return free


def _back_substitute(
    rows: list[list[Scalar]], rhs: list[Scalar], free: list[int], n_cols: int
) -> Optional[list[Scalar]]:
    rank = n_cols - len(free)
    if any(not value.is_zero() for value in rhs[rank:]):
        return None
    pivots = [c for c in range(n_cols) if c not in free]
    solution = [ZERO] * n_cols
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        s = -rhs[r]
        for c in range(pc + 1, n_cols):
            s = s + rows[r][c] * solution[c]
        solution[pc] = -s / rows[r][pc]
    return solution


def _matrix_from(
    basis: Sequence[Mapping[Hashable, Scalar]],
) -> tuple[list[Hashable], list[list[Scalar]]]:
    keys = sorted({k for vec in basis for k in vec}, key=repr)
    rows = [[vec.get(k, ZERO) for vec in basis] for k in keys]
    return keys, rows


def rank(vectors: Sequence[Mapping[Hashable, Scalar]]) -> int:
    """Exact rank of a list of coordinate vectors."""
    if not vectors:
        return 0
    _, rows = _matrix_from(vectors)
    if not rows:
        return 0
    free = _row_echelon(rows)
    return len(vectors) - len(free)


def solve_in_span(
    target: Mapping[Hashable, Scalar], basis: Sequence[Mapping[Hashable, Scalar]]
) -> Optional[list[Scalar]]:
    """Coefficients c with Σ c_k basis_k = target, or None if not in the span.

    The basis is assumed linearly independent; free directions are set to zero.
    """
    if not basis:
        return [] if not target else None
    keys, rows = _matrix_from(list(basis) + [target])
    rhs = [row.pop() for row in rows]
    n_cols = len(basis)
    if not rows:
        return [ZERO] * n_cols
    free = _row_echelon(rows, rhs)
    return _back_substitute(rows, rhs, free, n_cols)


def closes_in_span(elements: Sequence[E], ops: ElementOps[E]) -> bool:
    """True when every pairwise bracket lies in the span of ``elements``."""
    coords = [ops.coordinates(e) for e in elements]
    for i, a in enumerate(elements):
        for b in elements[i + 1 :]:
            if solve_in_span(ops.coordinates(ops.bracket(a, b)), coords) is None:
                return False
    return True


# ----------------------------------------------------------------------
# Structure constants
# ----------------------------------------------------------------------


@dataclass
class StructureConstants:
    """f[i][j][k] with [g_i, g_j] = Σ_k f[i][j][k] g_k."""

    labels: list[str]
    table: list[list[list[Scalar]]]

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def nonzero_entries(self) -> Iterable[tuple[int, int, int, Scalar]]:
        for i, row in enumerate(self.table):
            for j, vec in enumerate(row):
                for k, value in enumerate(vec):
                    if not value.is_zero():
                        yield i, j, k, value

    def to_json(self) -> dict[str, Any]:
        return {
            "labels": self.labels,
            "entries": [
                {
                    "i": self.labels[i],
                    "j": self.labels[j],
                    "k": self.labels[k],
                    "value": value.to_json(),
                }
                for i, j, k, value in self.nonzero_entries()
                if i < j
            ],
        }

    def same_as(self, other: StructureConstants) -> bool:
        return self.dimension == other.dimension and self.table == other.table

    def real_form(self) -> list[list[list[Fraction]]]:
        """Constants as rationals, rescaling the basis by i when they are imaginary.

        Raises:
            ValueError: if neither the constants nor i times them are rational
        """
        values = [v for _, _, _, v in self.nonzero_entries()]
        if all(v.is_rational() for v in values):
            factor = Scalar(1)
        elif all((I * v).is_rational() for v in values):
            factor = I
        else:
            raise ValueError("Structure constants have no real form in this basis")
        return [
            [[(factor * v).as_fraction() for v in vec] for vec in row]
            for row in self.table
        ]


def structure_constants(
    elements: Sequence[E], labels: Sequence[str], ops: ElementOps[E]
) -> StructureConstants:
    """
    Decompose every bracket of ``elements`` in their own span.

    Raises:
        ValueError: if a bracket leaves the span
    """
    coords = [ops.coordinates(e) for e in elements]
    n = len(elements)
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            bracket = ops.coordinates(ops.bracket(elements[i], elements[j]))
            solution = solve_in_span(bracket, coords)
            if solution is None:
                raise ValueError(
                    f"[{labels[i]}, {labels[j]}] is not in the span of the generators"
                )
            table[i][j] = solution
            table[j][i] = [-v for v in solution]
    return StructureConstants(list(labels), table)


def killing_signature(
    sc: StructureConstants, tolerance: float = 1e-9
) -> tuple[int, int]:
    """(positive, negative) eigenvalue counts of the Killing form of the real form."""
    f = sc.real_form()
    n = sc.dimension
    killing = [[Fraction(0)] * n for _ in range(n)]
    # K_ij = tr(ad_i ad_j) = Σ_{k,l} f_ik^l f_jl^k
    for i in range(n):
        for j in range(i, n):
            total = Fraction(0)
            for k in range(n):
                for m in range(n):
                    if f[i][k][m] and f[j][m][k]:
                        total += f[i][k][m] * f[j][m][k]
            killing[i][j] = killing[j][i] = total
    values = np.linalg.eigvalsh(np.array(killing, dtype=float))
    positive = int(np.sum(values > tolerance))
    negative = int(np.sum(values < -tolerance))
    return positive, negative


def match_generators(
    sources: Mapping[str, E],
    targets: Mapping[str, E],
    ops: ElementOps[E],
) -> Optional[dict[str, tuple[str, Scalar]]]:
    """
    Find for each source a unique target with source = c·target.

    Returns:
        {source label: (target label, c)} when the correspondence is a bijection,
        otherwise None
    """
    target_coords = {label: ops.coordinates(t) for label, t in targets.items()}
    matches: dict[str, tuple[str, Scalar]] = {}
    for label, element in sources.items():
        src = ops.coordinates(element)
        found = [
            (t_label, c)
            for t_label, t in target_coords.items()
            if (c := _proportionality(src, t)) is not None
        ]
        if len(found) != 1:
            logger.debug(f"Generator {label} has {len(found)} proportional targets")
            return None
        matches[label] = found[0]
    if len({t for t, _ in matches.values()}) != len(matches):
        return None
    return matches


def _proportionality(
    a: Mapping[Hashable, Scalar], b: Mapping[Hashable, Scalar]
) -> Optional[Scalar]:
    if not a or not b or set(a) != set(b):
        return None
    key = next(iter(b))
    c = a[key] / b[key]
    if all(a[k] == c * b[k] for k in b):
        return c
    return None
