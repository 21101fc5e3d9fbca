"""
Resolution of Unity
Radial moment check of  int |z><z| d nu(z) = 1

The angular integral kills every off-diagonal element, so the identity
reduces to the radial conditions

    D_n = 2 pi int_0^R S(r^2)^{-1} r^{2n+1} w(r) dr / (2 b^2_{n-1})!  =  const

for all n. Integrals run over composite Gauss-Legendre panels: geometric
panels graded toward r = 0, then panels doubling outward (width capped)
until a panel adds less than OUTER_STOP_TOL of the running total for every n.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from config import Config
from errors import ConvergenceError, FamilyError
from coherent.states import normalization_sum
from recurrence.families import CoefficientSequence, FamilyLabel, gen_factorial
from resolution.measures import RadialMeasure
from verification.report import ReportStatus, VerificationReport, status_from_error

logger = logging.getLogger(__name__)

OUTER_STOP_TOL = 1e-15
MAX_PANEL_WIDTH = 8.0
MAX_OUTER_PANELS = 400

Panel = Tuple[float, float]


@dataclass
class UnityQuadrature:
    """Radial integrals I_n = int r^{2n+1} g(r) dr for n = 0..n_max, g = w/S"""
    integrals: np.ndarray
    inner_cut: float
    outer_cut: float
    panels: int


def _profile(coeffs: CoefficientSequence, measure: RadialMeasure) -> Callable[[float], float]:
    def g(r: float) -> float:
        try:
            s = normalization_sum(coeffs, r * r)
        except ConvergenceError:
            # S overflowed; w/S is below every contribution that counts
            return 0.0
        return measure(r) / s
    return g


def _panel_moments(g: Callable[[float], float], panel: Panel, nodes: int, n_max: int) -> np.ndarray:
    lower, upper = panel
    x, w = np.polynomial.legendre.leggauss(nodes)
    half = 0.5 * (upper - lower)
    r = half * x + 0.5 * (upper + lower)
    profile = np.array([g(float(point)) for point in r]) * w * half
    powers = np.vstack([r ** (2 * n + 1) for n in range(n_max + 1)])
    return powers @ profile


def _inner_panels(upper: float, r_min: float) -> List[Panel]:
    panels = []
    right = upper
    while right > r_min:
        left = max(0.5 * right, r_min)
        panels.append((left, right))
        right = left
    panels.reverse()
    return panels


def _outer_panel(left: float) -> Panel:
    return left, min(2.0 * left, left + MAX_PANEL_WIDTH)


def _integrate(g: Callable[[float], float], radius: float, n_max: int,
               nodes: int, workers: int) -> UnityQuadrature:
    finite = math.isfinite(radius)
    edge = radius * math.sqrt(Config.UNITY_EDGE_FRACTION) if finite else 1.0
    inner = _inner_panels(edge, Config.UNITY_R_MIN)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        # map keeps submission order, so the assembly is deterministic
        contributions = list(pool.map(lambda p: _panel_moments(g, p, nodes, n_max), inner))
        total = np.sum(contributions, axis=0)
        outer_cut = edge
        panel_count = len(inner)

        if not finite:
            left = edge
            while panel_count < len(inner) + MAX_OUTER_PANELS:
                batch = []
                for _ in range(workers):
                    batch.append(_outer_panel(left))
                    left = batch[-1][1]
                results = list(pool.map(lambda p: _panel_moments(g, p, nodes, n_max), batch))
                stopped = False
                for panel, part in zip(batch, results):
                    total = total + part
                    panel_count += 1
                    outer_cut = panel[1]
                    if np.all(np.abs(part) <= OUTER_STOP_TOL * np.abs(total)):
                        stopped = True
                        break
                if stopped:
                    break
            else:
                raise ConvergenceError(f"radial integrals still growing at r={outer_cut:.4g}")

    return UnityQuadrature(integrals=total, inner_cut=Config.UNITY_R_MIN,
                           outer_cut=outer_cut, panels=panel_count)


def _check_match(coeffs: CoefficientSequence, measure: RadialMeasure):
    if coeffs.family_label is not measure.family_label:
        raise FamilyError(f"{measure.family_label.value} measure cannot resolve the "
                          f"{coeffs.family_label.value} identity")
    for key, value in measure.params.items():
        if not math.isclose(coeffs.params.get(key, math.nan), value):
            raise FamilyError(f"measure parameter {key}={value} does not match {coeffs.name}")


def radial_moments(coeffs: CoefficientSequence, measure: RadialMeasure, n_max: int,
                   nodes: Optional[int] = None, workers: Optional[int] = None) -> Tuple[np.ndarray, UnityQuadrature]:
    """
    D_0..D_{n_max} for one panel rule

    Returns:
        (D vector, underlying quadrature record)
    """
    _check_match(coeffs, measure)
    nodes = nodes or Config.UNITY_PANEL_NODES
    workers = workers or Config.WORKERS
    quadrature = _integrate(_profile(coeffs, measure), measure.radius, n_max, nodes, workers)
    factorials = np.array([gen_factorial(coeffs, n, 2.0) for n in range(n_max + 1)])
    return 2.0 * math.pi * quadrature.integrals / factorials, quadrature


def check_unity(coeffs: CoefficientSequence, measure: RadialMeasure,
                n_max: int, tol: float) -> VerificationReport:
    """
    Resolution-of-unity check through the radial moments D_n

    PASS means D_n / D_0 is constant to tol (and D_n = 1 for the flat Hermite
    measure). The Legendre disk is cut short of its edge, so that report is
    informational.

    Args:
        coeffs: Family whose coherent states are integrated
        measure: Radial measure of the same family
        n_max: Largest Fock level checked
        tol: Tolerance on the spread max |D_n/D_0 - 1|

    Returns:
        VerificationReport with the D_n vector and the quadrature cut-offs

    Raises:
        ConvergenceError: doubling the panel nodes moved some D_n by more
            than Config.UNITY_CONVERGENCE_TOL (asserted families only)
    """
    informational = coeffs.family_label is FamilyLabel.LEGENDRE
    nodes = Config.UNITY_PANEL_NODES
    d_values, quadrature = radial_moments(coeffs, measure, n_max, nodes)
    refined, _ = radial_moments(coeffs, measure, n_max, 2 * nodes)

    doubling_change = float(np.max(np.abs(refined - d_values) / np.abs(refined)))
    converged = doubling_change <= Config.UNITY_CONVERGENCE_TOL
    if not converged and not informational:
        raise ConvergenceError(
            f"{coeffs.name}: D_n changed by {doubling_change:.3e} when doubling panel nodes"
        )

    spread = float(np.max(np.abs(refined / refined[0] - 1.0)))
    details = {
        'D': refined,
        'spread': spread,
        'node_doubling_change': doubling_change,
        'converged': converged,
        'panel_nodes': [nodes, 2 * nodes],
        'panels': quadrature.panels,
        'r_min': quadrature.inner_cut,
        'r_max': quadrature.outer_cut,
        'measure': measure.description,
    }
    max_error = spread
    if coeffs.family_label is FamilyLabel.HERMITE:
        calibration = float(np.max(np.abs(refined - 1.0)))
        details['calibration_error'] = calibration
        max_error = max(spread, calibration)

    if informational:
        status = ReportStatus.REPORT
        details['radius'] = measure.radius
    else:
        status = status_from_error(max_error, tol)
    logger.info(f"{coeffs.name}: D_0 = {refined[0]:.10g}, spread {spread:.3e}")

    return VerificationReport(
        check='unity',
        family=coeffs.family_label.value,
        params=dict(coeffs.params),
        status=status,
        max_error=max_error,
        details=details,
    )
