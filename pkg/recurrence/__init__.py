"""
Recurrence Module - polynomial families from three-term recurrence coefficients

This module provides:
- Builtin Hermite, Laguerre, Legendre and Chebyshev (first kind) coefficient sequences
- Orthonormal polynomial evaluation by forward recurrence
- Generalized factorials (scale b^2_{n-1})!
- Orthogonality measures with matched Gauss rules
"""
from recurrence.families import (
    FamilyLabel, CoefficientSequence, parse_family_label,
    builtin_family, custom_family,
    eval_poly, eval_poly_table, gen_factorial, gen_factorial_exact
)
from recurrence.measures import MeasureSpec, measure_of, golub_welsch, orthonormality_defect

__all__ = [
    'FamilyLabel', 'CoefficientSequence', 'parse_family_label',
    'builtin_family', 'custom_family',
    'eval_poly', 'eval_poly_table', 'gen_factorial', 'gen_factorial_exact',
    'MeasureSpec', 'measure_of', 'golub_welsch', 'orthonormality_defect'
]
