"""
Truncated Fock space realization.

Ladder matrices are built per mode as sparse off-diagonal matrices and lifted
to the multi-mode basis with Kronecker products. Basis states are occupation
tuples in row-major order (mode 0 most significant), which matches
``scipy.sparse.kron`` ordering.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np
from scipy import linalg, sparse

from .errors import FockError
from .weyl import AlgebraSignature, WeylElement

logger = logging.getLogger(__name__)

INTERIOR_MARGIN = 2
EIGEN_TOLERANCE = 1e-8


@dataclass(frozen=True)
class FockBasis:
    """Occupation-number basis with ``cutoff`` quanta per mode."""

    modes: int
    cutoff: int

    def __post_init__(self) -> None:
        if self.modes < 1:
            raise FockError(f"Fock basis needs at least one mode, got {self.modes}")
        if self.cutoff < 1:
            raise FockError(f"Fock cutoff must be positive, got {self.cutoff}")

    @property
    def levels(self) -> int:
        return self.cutoff + 1

    @property
    def dimension(self) -> int:
        return self.levels**self.modes

    @cached_property
    def states(self) -> tuple[tuple[int, ...], ...]:
        return tuple(itertools.product(range(self.levels), repeat=self.modes))

    @cached_property
    def total_quanta(self) -> np.ndarray:
        return np.array([sum(s) for s in self.states], dtype=int)

    def index_of(self, state: tuple[int, ...]) -> int:
        if len(state) != self.modes or any(not 0 <= n <= self.cutoff for n in state):
            raise FockError(f"State {state} is not in the basis")
        index = 0
        for n in state:
            index = index * self.levels + n
        return index

    def interior(self, margin: int = INTERIOR_MARGIN) -> np.ndarray:
        """Indices of states with total quanta ≤ cutoff − margin."""
        return np.flatnonzero(self.total_quanta <= self.cutoff - margin)

    def identity(self) -> FockOperator:
        matrix = sparse.identity(self.dimension, dtype=complex, format="csr")
        return FockOperator(self, matrix)


@dataclass(frozen=True, eq=False)
class FockOperator:
    """Complex sparse matrix acting on a ``FockBasis``."""

    basis: FockBasis
    matrix: sparse.csr_matrix

    def __post_init__(self) -> None:
        shape = (self.basis.dimension, self.basis.dimension)
        if self.matrix.shape != shape:
            raise FockError(f"Matrix shape {self.matrix.shape} does not match {shape}")
        if not np.all(np.isfinite(self.matrix.data)):
            raise FockError("Fock operator has non-finite entries")

    def _check(self, other: FockOperator) -> None:
        if other.basis != self.basis:
            raise FockError("Fock operators live on different bases")

    def __add__(self, other: FockOperator) -> FockOperator:
        self._check(other)
        return FockOperator(self.basis, (self.matrix + other.matrix).tocsr())

    def __sub__(self, other: FockOperator) -> FockOperator:
        self._check(other)
        return FockOperator(self.basis, (self.matrix - other.matrix).tocsr())

    def __matmul__(self, other: FockOperator) -> FockOperator:
        self._check(other)
        return FockOperator(self.basis, (self.matrix @ other.matrix).tocsr())

    def scale(self, factor: complex) -> FockOperator:
        return FockOperator(self.basis, (self.matrix * factor).tocsr())

    def commutator(self, other: FockOperator) -> FockOperator:
        return self @ other - other @ self

    def dagger(self) -> FockOperator:
        return FockOperator(self.basis, self.matrix.conj().transpose().tocsr())

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def interior_block(self, margin: int = INTERIOR_MARGIN) -> np.ndarray:
        idx = self.basis.interior(margin)
        return self.matrix[idx][:, idx].toarray()

    def element(self, row: tuple[int, ...], col: tuple[int, ...]) -> complex:
        return complex(self.matrix[self.basis.index_of(row), self.basis.index_of(col)])


def _single_mode(levels: int, raising: bool) -> sparse.csr_matrix:
    offdiag = np.sqrt(np.arange(1, levels, dtype=float))
    lower = sparse.diags(offdiag, 1, shape=(levels, levels), dtype=complex)
    return (lower.T if raising else lower).tocsr()


def ladder(basis: FockBasis, mode: int, direction: str) -> FockOperator:
    """
    Raising or lowering operator on one mode.

    Args:
        basis: Target basis
        mode: Mode index (0-based)
        direction: "raise" or "lower"

    Returns:
        FockOperator with ⟨n+1|a⁺|n⟩ = √(n+1); raising annihilates the top level
    """
    if not 0 <= mode < basis.modes:
        raise FockError(f"Mode {mode} out of range for {basis.modes}-mode basis")
    if direction not in ("raise", "lower"):
        raise FockError(f"Unknown ladder direction: {direction}")
    factors = [sparse.identity(basis.levels, dtype=complex, format="csr")] * basis.modes
    factors[mode] = _single_mode(basis.levels, direction == "raise")
    matrix = factors[0]
    for factor in factors[1:]:
        matrix = sparse.kron(matrix, factor, format="csr")
    return FockOperator(basis, matrix)


def oscillator_dictionary(
    signature: AlgebraSignature, basis: FockBasis
) -> dict[str, FockOperator]:
    """Map position k to a⁺_k and derivative k to a⁻_k of mode k."""
    if signature.size != basis.modes:
        raise FockError(
            f"Signature {signature.name} has {signature.size} modes, "
            f"basis has {basis.modes}"
        )
    dictionary = {}
    for k, (pos, der) in enumerate(
        zip(signature.position_names, signature.derivative_names)
    ):
        dictionary[pos] = ladder(basis, k, "raise")
        dictionary[der] = ladder(basis, k, "lower")
    return dictionary


def realize(e: WeylElement, dictionary: Mapping[str, FockOperator]) -> FockOperator:
    """Σ coeff · (positions)^α (derivatives)^β as matrices, in stored order."""
    sig = e.signature
    missing = [n for n in sig.generator_names if n not in dictionary]
    if missing:
        raise FockError(f"Dictionary misses generators {missing}")
    bases = {op.basis for op in dictionary.values()}
    if len(bases) != 1:
        raise FockError("Dictionary operators live on different bases")
    basis = bases.pop()
    if sig.is_radial:
        raise FockError("Radial elements have no Fock realization")

    powers: dict[tuple[str, int], sparse.csr_matrix] = {}

    def power(name: str, k: int) -> sparse.csr_matrix:
        if (name, k) not in powers:
            result = dictionary[name].matrix
            for _ in range(k - 1):
                result = result @ dictionary[name].matrix
            powers[(name, k)] = result.tocsr()
        return powers[(name, k)]

    total = sparse.csr_matrix((basis.dimension, basis.dimension), dtype=complex)
    for (alpha, _, _, beta), coeff in e.items():
        term = sparse.identity(basis.dimension, dtype=complex, format="csr")
        for name, k in zip(sig.position_names, alpha):
            if k:
                term = term @ power(name, k)
        for name, k in zip(sig.derivative_names, beta):
            if k:
                term = term @ power(name, k)
        total = total + term * coeff.to_complex()
    return FockOperator(basis, total.tocsr())


@dataclass(frozen=True)
class SpectrumLevel:
    """Eigenvalue cluster."""

    value: float
    multiplicity: int

    def to_dict(self) -> dict:
        return {"value": self.value, "multiplicity": self.multiplicity}


def spectrum(
    op: FockOperator,
    hermitian: bool = True,
    tolerance: float = EIGEN_TOLERANCE,
    rows: Optional[np.ndarray] = None,
) -> list[SpectrumLevel]:
    """
    Sorted eigenvalues of ``op`` grouped into clusters.

    Args:
        op: Operator to diagonalize (dense solver)
        hermitian: Use the symmetric eigensolver
        tolerance: Clustering tolerance between consecutive eigenvalues
        rows: Optional index subset to diagonalize instead of the full matrix

    Returns:
        Levels in ascending order with multiplicities
    """
    matrix = op.dense() if rows is None else op.matrix[rows][:, rows].toarray()
    if not np.all(np.isfinite(matrix)):
        raise FockError("Cannot diagonalize a matrix with non-finite entries")
    if hermitian:
        values = linalg.eigh(matrix, eigvals_only=True)
    else:
        values = np.sort_complex(linalg.eigvals(matrix)).real
    values = np.sort(np.asarray(values, dtype=float))

    levels: list[SpectrumLevel] = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] - values[i - 1] > tolerance:
            cluster = values[start:i]
            levels.append(SpectrumLevel(float(np.mean(cluster)), i - start))
            start = i
    logger.debug(f"Spectrum: {len(levels)} levels from dimension {len(values)}")
    return levels


def interior_residual(
    lhs: FockOperator, rhs: FockOperator, margin: int = INTERIOR_MARGIN
) -> float:
    """Max |lhs − rhs| over interior rows and columns."""
    diff = (lhs - rhs).interior_block(margin)
    return float(np.max(np.abs(diff))) if diff.size else 0.0


def hermiticity_residual(op: FockOperator, margin: int = INTERIOR_MARGIN) -> float:
    return interior_residual(op, op.dagger(), margin)
