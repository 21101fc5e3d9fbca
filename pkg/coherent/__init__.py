"""
Coherent Module - Glauber-Barut-Girardello coherent states

This module provides:
- Series normalizations, states, overlaps and eigen-residuals for any family
- Closed forms for the Laguerre, Legendre and Chebyshev oscillators
"""
from coherent.states import (
    DomainOfDefinition, CoherentStateVector, domain_of,
    generalized_exp, normalization_sum, coherent_state, overlap,
    eigen_residual, series_wavefunction
)
from coherent.closed_forms import (
    ClosedForms, hermite_closed_forms,
    laguerre_norm, laguerre_closed_forms, laguerre_overlap, laguerre_overlap_printed,
    legendre_norm, legendre_closed_forms, legendre_overlap,
    chebyshev_norm, chebyshev_resummed, chebyshev_printed,
    chebyshev_closed_forms, chebyshev_closed_form
)

__all__ = [
    'DomainOfDefinition', 'CoherentStateVector', 'domain_of',
    'generalized_exp', 'normalization_sum', 'coherent_state', 'overlap',
    'eigen_residual', 'series_wavefunction',
    'ClosedForms', 'hermite_closed_forms',
    'laguerre_norm', 'laguerre_closed_forms', 'laguerre_overlap', 'laguerre_overlap_printed',
    'legendre_norm', 'legendre_closed_forms', 'legendre_overlap',
    'chebyshev_norm', 'chebyshev_resummed', 'chebyshev_printed',
    'chebyshev_closed_forms', 'chebyshev_closed_form'
]
