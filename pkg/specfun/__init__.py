"""
Special Functions - Gamma, Pochhammer, modified Bessel I/K, Gauss 2F1, Legendre P

Every routine here is real- or complex-valued double precision and reports
domain violations and non-convergence through the errors module.
"""
from specfun.control import SeriesControl, default_control
from specfun.gamma import gamma_fn, reciprocal_gamma, pochhammer
from specfun.bessel import bessel_i, bessel_i_reduced, bessel_k
from specfun.hypergeometric import gauss_2f1
from specfun.elliptic import carlson_rf, carlson_rd, elliptic_k, elliptic_e
from specfun.legendre import legendre_p

__all__ = [
    'SeriesControl',
    'default_control',
    'gamma_fn',
    'reciprocal_gamma',
    'pochhammer',
    'bessel_i',
    'bessel_i_reduced',
    'bessel_k',
    'gauss_2f1',
    'carlson_rf',
    'carlson_rd',
    'elliptic_k',
    'elliptic_e',
    'legendre_p',
]
