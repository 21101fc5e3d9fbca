"""
Oscillator Operators
Finite Fock-basis truncations of X, P, H, N, B(N) and the ladder operators
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from errors import DomainError
from moments.jacobi import jacobi_truncation
from recurrence.families import CoefficientSequence

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)


class OperatorLabel(Enum):
    """Operators of the generalized oscillator algebra"""
    X = "X"
    P = "P"
    H = "H"
    N = "N"
    B_OF_N = "B_of_N"
    A = "a"
    A_DAGGER = "a_dagger"


@dataclass(frozen=True)
class OperatorTruncation:
    """Leading dim x dim block of an operator in the Fock basis |0>, |1>, ..."""
    label: OperatorLabel
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def interior(self, trim: int = 1) -> np.ndarray:
        """Block of indices < dim - trim, where shift relations are unaffected by the cut"""
        size = self.dim - trim
        return self.entries[:size, :size]

    def is_hermitian(self, tol: float = 0.0) -> bool:
        return bool(np.max(np.abs(self.entries - self.entries.conj().T), initial=0.0) <= tol)

    def adjoint(self, label: OperatorLabel) -> 'OperatorTruncation':
        return OperatorTruncation(label, self.entries.conj().T.copy())


def _require_ladder_dim(dim: int):
    if dim < 2:
        raise DomainError(f"Ladder operators need dim >= 2, got {dim}")


def position_operator(coeffs: CoefficientSequence, dim: int) -> OperatorTruncation:
    """X as the truncated Jacobi matrix"""
    return OperatorTruncation(OperatorLabel.X, jacobi_truncation(coeffs, dim).astype(complex))


def number_operator(dim: int) -> OperatorTruncation:
    """N|n> = n|n>"""
    return OperatorTruncation(OperatorLabel.N, np.diag(np.arange(dim, dtype=complex)))


def b_operator(coeffs: CoefficientSequence, dim: int, shift: int = 0) -> OperatorTruncation:
    """
    B(N + shift), diagonal with entries b^2_{n-1+shift}

    shift=0 gives B(N) (first entry b_{-1}^2 = 0), shift=1 gives B(N+1).
    """
    diagonal = [coeffs.b_squared(n - 1 + shift) for n in range(dim)]
    return OperatorTruncation(OperatorLabel.B_OF_N, np.diag(np.array(diagonal, dtype=complex)))


def _shift(coeffs: CoefficientSequence, dim: int, signed: bool) -> np.ndarray:
    matrix = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        b = coeffs.b_signed(n - 1)
        matrix[n - 1, n] = SQRT2 * (b if signed else abs(b))
    return matrix


def lowering_shift(coeffs: CoefficientSequence, dim: int) -> OperatorTruncation:
    """
    Weighted lowering shift |n> -> sqrt(2)|b_{n-1}| |n-1>

    This is the annihilation operator whose eigenvectors are the coherent
    states with positive denominators, for every family.
    """
    _require_ladder_dim(dim)
    return OperatorTruncation(OperatorLabel.A, _shift(coeffs, dim, signed=False))


def ladder_ops(coeffs: CoefficientSequence, dim: int) -> Tuple[OperatorTruncation, OperatorTruncation]:
    """
    Annihilation and creation operators with (a + a^dagger)/sqrt(2) = X

    Args:
        coeffs: Recurrence data
        dim: Truncation size, dim >= 2

    Returns:
        (a, a_dagger); a carries diag(a_n)/sqrt(2) for nonsymmetric families
    """
    _require_ladder_dim(dim)
    lower = _shift(coeffs, dim, signed=True)
    if not coeffs.symmetric:
        lower += np.diag([coeffs.a_value(n) / SQRT2 for n in range(dim)])
    a = OperatorTruncation(OperatorLabel.A, lower)
    return a, a.adjoint(OperatorLabel.A_DAGGER)


def momentum_and_hamiltonian(coeffs: CoefficientSequence,
                             dim: int) -> Tuple[OperatorTruncation, OperatorTruncation]:
    """
    P = (S^dagger - S)/(i sqrt(2)) from the shift part S of a, and H = X^2 + P^2

    With this sign convention P[n+1, n] = -i b_n and P[n, n+1] = i b_n.
    H is exact on indices < dim - 1; only its last diagonal entry feels the cut.
    """
    _require_ladder_dim(dim)
    lower = _shift(coeffs, dim, signed=True)
    momentum = (lower.conj().T - lower) / (1j * SQRT2)
    position = position_operator(coeffs, dim).entries
    hamiltonian = position @ position + momentum @ momentum
    logger.debug(f"{coeffs.name}: built P and H at dim={dim}")
    return (OperatorTruncation(OperatorLabel.P, momentum),
            OperatorTruncation(OperatorLabel.H, hamiltonian))
