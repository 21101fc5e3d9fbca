"""
Moments Module - Jacobi-matrix moment machinery

This module provides:
- Truncated Jacobi matrices and moments mu_k = <e_0, J^k e_0>
- Quadrature moments against the orthogonality measure
- Nested coefficient sums alpha_{2p-1, n-1} and the moment identity report
"""
from moments.jacobi import (
    MomentSource, MomentTable,
    jacobi_truncation, moment_via_jacobi, jacobi_moments, quadrature_moments
)
from moments.theorem1 import alpha_coeff, alpha_coeff_enumerated, check_theorem1

__all__ = [
    'MomentSource', 'MomentTable',
    'jacobi_truncation', 'moment_via_jacobi', 'jacobi_moments', 'quadrature_moments',
    'alpha_coeff', 'alpha_coeff_enumerated', 'check_theorem1'
]
