"""
Resolution Module - numerical resolution of unity for coherent states
"""
from resolution.measures import RadialMeasure, laguerre_measure, legendre_measure, hermite_measure
from resolution.unity import UnityQuadrature, radial_moments, check_unity

__all__ = [
    'RadialMeasure', 'laguerre_measure', 'legendre_measure', 'hermite_measure',
    'UnityQuadrature', 'radial_moments', 'check_unity'
]
