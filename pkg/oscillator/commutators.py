"""
Oscillator Commutation Relations
Interior-block checks of the generalized oscillator algebra
"""
import logging
from typing import Callable, Dict, Optional, Union

import numpy as np

from errors import DomainError, FamilyError
from oscillator.operators import b_operator, ladder_ops, number_operator
from recurrence.families import CoefficientSequence
from verification.report import ReportStatus, VerificationReport, status_from_error

logger = logging.getLogger(__name__)

Deformation = Union[float, Callable[[int], float]]


def deformation_parameters(coeffs: CoefficientSequence, A: float) -> Callable[[int], float]:
    """
    C(n) = b_n^2 - A b_{n-1}^2, so that a a^dagger - A a^dagger a = 2 C(N)

    Hermite with A = 1 gives the constant 1/2.
    """
    return lambda n: coeffs.b_squared(n) - A * coeffs.b_squared(n - 1)


def _residual_summary(residual: np.ndarray) -> Dict:
    magnitudes = np.abs(residual)
    row, col = np.unravel_index(int(np.argmax(magnitudes)), magnitudes.shape)
    return {
        'max_error': float(magnitudes[row, col]),
        'worst_entry': [int(row), int(col)],
    }


def check_theorem2(coeffs: CoefficientSequence, dim: int, tol: float,
                   A: Optional[float] = None, C: Optional[Deformation] = None) -> VerificationReport:
    """
    Check the commutation relations on indices < dim - 1

        [a, a^dagger] = 2 (B(N+1) - B(N))
        [N, a] = -a,  [N, a^dagger] = a^dagger
        a a^dagger - A a^dagger a = 2 C(N)      (only when A and C are given)

    Args:
        coeffs: Symmetric recurrence data
        dim: Truncation size, dim >= 4
        tol: Largest tolerated entry of any residual
        A: Deformation constant
        C: Constant or callable n -> C(n)

    Returns:
        VerificationReport naming the worst entry of each relation
    """
    if not coeffs.symmetric:
        raise FamilyError(f"{coeffs.name}: commutation relations are checked for symmetric families only")
    if dim < 4:
        raise DomainError(f"Commutator check needs dim >= 4, got {dim}")
    if (A is None) != (C is None):
        raise DomainError("A and C must be given together")

    a, a_dagger = ladder_ops(coeffs, dim)
    a_op, ad_op = a.entries, a_dagger.entries
    number = number_operator(dim).entries
    b_now = b_operator(coeffs, dim, shift=0).entries
    b_next = b_operator(coeffs, dim, shift=1).entries
    interior = dim - 1

    commutator = a_op @ ad_op - ad_op @ a_op
    residuals = {
        'a_adagger': commutator - 2.0 * (b_next - b_now),
        'N_a': number @ a_op - a_op @ number + a_op,
        'N_adagger': number @ ad_op - ad_op @ number - ad_op,
    }
    if A is not None:
        c_of = C if callable(C) else (lambda n, value=float(C): value)
        deformation = np.diag([2.0 * c_of(n) for n in range(dim)]).astype(complex)
        residuals['deformed'] = a_op @ ad_op - A * (ad_op @ a_op) - deformation

    relations = {name: _residual_summary(res[:interior, :interior]) for name, res in residuals.items()}
    worst_name = max(relations, key=lambda name: relations[name]['max_error'])
    max_error = relations[worst_name]['max_error']
    status = status_from_error(max_error, tol)
    if status is ReportStatus.FAIL:
        logger.warning(f"{coeffs.name}: relation {worst_name} off by {max_error:.3e} "
                       f"at entry {relations[worst_name]['worst_entry']}")

    details = {
        'dim': dim,
        'interior': interior,
        'tol': tol,
        'relations': relations,
        'worst_relation': worst_name,
        'commutator_diagonal': np.real(np.diag(commutator)[:min(interior, 8)]),
    }
    if A is not None:
        details['A'] = A
    return VerificationReport(
        check='theorem2',
        family=coeffs.family_label.value,
        params=dict(coeffs.params),
        status=status,
        max_error=max_error,
        details=details,
    )
