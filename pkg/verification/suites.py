"""
Verification Suites
Named groups of checks run by ``main.py verify``; every suite returns a list of
VerificationReports in a fixed order
"""
import cmath
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from coherent import (
    chebyshev_closed_forms, coherent_state, domain_of, eigen_residual, hermite_closed_forms,
    laguerre_closed_forms, laguerre_norm, laguerre_overlap, laguerre_overlap_printed,
    legendre_closed_forms, legendre_norm, legendre_overlap,
    normalization_sum, overlap, series_wavefunction
)
from config import Config
from errors import ConvergenceError, DomainError, GenOscError
from moments import (
    alpha_coeff, alpha_coeff_enumerated, check_theorem1,
    jacobi_moments, quadrature_moments
)
from oscillator import check_theorem2
from recurrence import (
    CoefficientSequence, FamilyLabel, builtin_family, gen_factorial, measure_of, orthonormality_defect
)
from resolution import check_unity, hermite_measure, laguerre_measure, legendre_measure
from specfun import gamma_fn, pochhammer
from verification.report import ReportStatus, VerificationReport, status_from_error

logger = logging.getLogger(__name__)

# acceptance thresholds of the individual checks
ORTHONORMALITY_TOL = 1e-9
MOMENT_TOL = 1e-8
ODD_MOMENT_TOL = 1e-12
EIGEN_TOL = 1e-9
NORM_TOL = 1e-10
WAVEFUNCTION_TOL = 1e-7
CHEBYSHEV_TOL = 1e-10
OVERLAP_TOL = 1e-9
LAGUERRE_UNITY_TOL = 1e-6
HERMITE_UNITY_TOL = 1e-8

ORTHONORMALITY_DEGREE = 15
MOMENT_K_MAX = 20
THEOREM1_N_MAX = 5
ALPHA_N_MAX = 10
POCHHAMMER_N_MAX = 10

LAGUERRE_ALPHAS = (0.0, 0.5, 1.0, 2.5)
UNITY_ALPHAS = (0.0, 1.0)
SYMMETRIC = (FamilyLabel.HERMITE, FamilyLabel.LEGENDRE, FamilyLabel.CHEBYSHEV_FIRST)
BUILTIN = (FamilyLabel.HERMITE, FamilyLabel.LAGUERRE, FamilyLabel.LEGENDRE, FamilyLabel.CHEBYSHEV_FIRST)

SUITE_NAMES = ('theorem1', 'theorem2', 'eigen', 'closed_forms', 'overlap',
               'moments', 'orthonormality', 'unity')


@dataclass
class SuiteOptions:
    """What to verify: an optional family filter, Laguerre alpha, truncation size and tolerance"""
    family: Optional[FamilyLabel] = None
    alpha: Optional[float] = None
    dim: int = 64
    tol: float = field(default_factory=lambda: Config.DEFAULT_TOL)

    def wants(self, label: FamilyLabel) -> bool:
        return self.family is None or self.family is label

    def alphas(self, defaults=LAGUERRE_ALPHAS):
        return (self.alpha,) if self.alpha is not None else defaults

    def families(self, labels=BUILTIN) -> List[CoefficientSequence]:
        """Builtin families selected by the filter, Laguerre once per alpha"""
        selected = []
        for label in labels:
            if not self.wants(label):
                continue
            if label is FamilyLabel.LAGUERRE:
                selected.extend(builtin_family(label, alpha=a) for a in self.alphas())
            else:
                selected.append(builtin_family(label))
        return selected


def _report(check: str, coeffs: CoefficientSequence, max_error: float, tol: float,
            details: Dict) -> VerificationReport:
    return VerificationReport(
        check=check,
        family=coeffs.family_label.value,
        params=dict(coeffs.params),
        status=status_from_error(max_error, tol),
        max_error=max_error,
        details=dict(details, tol=tol),
    )


def _relative(value: complex, reference: complex) -> float:
    return abs(value - reference) / max(abs(reference), 1e-300)


def z_grid(coeffs: CoefficientSequence) -> List[complex]:
    """3 x 3 grid of points well inside the domain: three radii times three angles"""
    radius = domain_of(coeffs).radius
    if math.isinf(radius):
        magnitudes = (0.2, 1.0, 2.0)
    else:
        magnitudes = tuple(f * radius for f in (0.15, 0.4, 0.7))
    angles = (0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0)
    return [m * cmath.exp(1j * theta) for m in magnitudes for theta in angles]


# ----------------------------------------------------------------------------- suites

def orthonormality_suite(options: SuiteOptions) -> List[VerificationReport]:
    reports = []
    for coeffs in options.families():
        defect = orthonormality_defect(coeffs, ORTHONORMALITY_DEGREE, Config.QUADRATURE_NODES)
        worst = float(np.max(np.abs(defect)))
        reports.append(_report('orthonormality', coeffs, worst, ORTHONORMALITY_TOL,
                               {'n_max': ORTHONORMALITY_DEGREE, 'nodes': Config.QUADRATURE_NODES}))
    return reports


def moments_suite(options: SuiteOptions) -> List[VerificationReport]:
    reports = []
    for coeffs in options.families():
        exact = jacobi_moments(coeffs, MOMENT_K_MAX)
        quadrature = quadrature_moments(coeffs, MOMENT_K_MAX)
        errors = [abs(quadrature[k] - exact[k]) / max(1.0, abs(exact[k]))
                  for k in range(MOMENT_K_MAX + 1)]
        worst = max(errors)
        details = {'k_max': MOMENT_K_MAX, 'relative_errors': errors}
        if coeffs.symmetric:
            odd = max(exact.odd_defect(), quadrature.odd_defect())
            details['odd_moment_defect'] = odd
        report = _report('moments', coeffs, worst, MOMENT_TOL, details)
        if coeffs.symmetric and details['odd_moment_defect'] >= ODD_MOMENT_TOL:
            report.status = ReportStatus.FAIL
        reports.append(report)
    return reports


def theorem1_suite(options: SuiteOptions) -> List[VerificationReport]:
    reports = []
    for coeffs in options.families(SYMMETRIC):
        table = jacobi_moments(coeffs, 2 * THEOREM1_N_MAX + 2)
        reports.append(check_theorem1(coeffs, table, THEOREM1_N_MAX, options.tol))
        if coeffs.exact_b_squared is None:
            continue
        mismatches = []
        for n in range(1, ALPHA_N_MAX + 1):
            for p in range(1, n // 2 + 1):
                if alpha_coeff(coeffs, p, n, exact=True) != alpha_coeff_enumerated(coeffs, p, n, exact=True):
                    mismatches.append([p, n])
        reports.append(VerificationReport(
            check='alpha_coeff',
            family=coeffs.family_label.value,
            params=dict(coeffs.params),
            status=ReportStatus.FAIL if mismatches else ReportStatus.PASS,
            max_error=float(len(mismatches)),
            details={'n_max': ALPHA_N_MAX, 'arithmetic': 'exact', 'mismatches': mismatches},
        ))
    return reports


def theorem2_suite(options: SuiteOptions) -> List[VerificationReport]:
    reports = []
    for coeffs in options.families(SYMMETRIC):
        reports.append(check_theorem2(coeffs, options.dim, options.tol))
        if coeffs.family_label is FamilyLabel.HERMITE:
            reports.append(check_theorem2(coeffs, options.dim, options.tol, A=1.0, C=0.5))
    return reports


def eigen_suite(options: SuiteOptions) -> List[VerificationReport]:
    reports = []
    for coeffs in options.families():
        residuals, tails = [], []
        for z in z_grid(coeffs):
            state = coherent_state(coeffs, z)
            residuals.append(eigen_residual(coeffs, state))
            tails.append(state.tail_bound)
        reports.append(_report('eigen', coeffs, max(residuals), EIGEN_TOL,
                               {'z': z_grid(coeffs), 'residuals': residuals, 'tail_bounds': tails}))
    return reports


def _laguerre_closed_forms(alpha: float) -> List[VerificationReport]:
    coeffs = builtin_family(FamilyLabel.LAGUERRE, alpha=alpha)
    norm_errors = [_relative(normalization_sum(coeffs, m * m), laguerre_norm(alpha, m))
                   for m in (0.1, 1.0, 5.0)]
    rows, wave_errors = [], []
    for z in (0.5, 0.3 + 0.4j):
        for x in (0.5, 1.0, 2.0):
            forms = laguerre_closed_forms(alpha, z, x)
            series = series_wavefunction(coeffs, z, x)
            wave_errors.append(_relative(series, forms.wavefunction))
            rows.append({'z': z, 'x': x, 'series': series, 'closed_form': forms.wavefunction,
                         'printed_ratio': forms.printed_ratio})
    return [
        _report('closed_forms.norm', coeffs, max(norm_errors), NORM_TOL,
                {'abs_z': [0.1, 1.0, 5.0], 'relative_errors': norm_errors,
                 'measure_normalizer': laguerre_normalizer_note(alpha)}),
        _report('closed_forms.wavefunction', coeffs, max(wave_errors), WAVEFUNCTION_TOL,
                {'rows': rows}),
    ]


def laguerre_normalizer_note(alpha: float) -> Dict:
    """
    Laguerre measure normalizer in use, Gamma(alpha+1), next to the sqrt(Gamma(alpha+1))
    variant found in print, with the total mass each one gives
    """
    normalizer = gamma_fn(alpha + 1.0)
    return {
        'normalizer': 'Gamma(alpha+1)',
        'normalizer_value': normalizer,
        'total_mass': measure_of(builtin_family(FamilyLabel.LAGUERRE, alpha=alpha)).integrate_density(),
        'printed_normalizer': 'sqrt(Gamma(alpha+1))',
        'total_mass_with_printed': normalizer / math.sqrt(normalizer),
    }


def pochhammer_form_report(n_max: int = POCHHAMMER_N_MAX) -> VerificationReport:
    """
    Legendre generalized factorial (2 b^2_{n-1})! against the Pochhammer form
    (n!)^2 / ((1/2)_n (3/2)_n) as usually printed; the printed form is 2^n times larger
    """
    coeffs = builtin_family(FamilyLabel.LEGENDRE)
    rows, pattern_errors = [], []
    for n in range(n_max + 1):
        factorial = gen_factorial(coeffs, n, 2.0)
        printed = math.factorial(n) ** 2 / (pochhammer(0.5, n) * pochhammer(1.5, n))
        ratio = printed / factorial
        pattern_errors.append(abs(ratio / 2.0 ** n - 1.0))
        rows.append({'n': n, 'generalized_factorial': factorial, 'printed': printed, 'ratio': ratio})
    mismatch = max(abs(row['ratio'] - 1.0) for row in rows)
    logger.info(f"legendre: printed Pochhammer form is 2^n (2b^2)!, "
                f"largest ratio {rows[-1]['ratio']:.6g} at n={n_max}")
    return VerificationReport(
        check='closed_forms.pochhammer',
        family=coeffs.family_label.value,
        params={},
        status=ReportStatus.REPORT,
        max_error=mismatch,
        details={'rows': rows, 'ratio_pattern': '2^n', 'pattern_error': max(pattern_errors)},
    )


def _legendre_closed_forms() -> List[VerificationReport]:
    coeffs = builtin_family(FamilyLabel.LEGENDRE)
    magnitudes = (0.0, 0.1, 0.3, 0.5, 0.6)
    norm_errors = [_relative(normalization_sum(coeffs, m * m), legendre_norm(m)) for m in magnitudes]
    try:
        normalization_sum(coeffs, 0.75 ** 2, enforce_domain=False)
        guard = False
    except ConvergenceError:
        guard = True
    rows, wave_errors = [], []
    for z in (0.3, 0.2 + 0.2j, -0.4):
        for x in (-0.5, 0.2, 0.7):
            forms = legendre_closed_forms(z, x)
            series = series_wavefunction(coeffs, z, x)
            wave_errors.append(_relative(series, forms.wavefunction))
            rows.append({'z': z, 'x': x, 'series': series, 'closed_form': forms.wavefunction,
                         'printed_ratio': forms.printed_ratio})
    return [
        _report('closed_forms.norm', coeffs, max(norm_errors) if guard else math.inf, NORM_TOL,
                {'abs_z': list(magnitudes), 'relative_errors': norm_errors,
                 'divergence_guard_at_0.75': guard}),
        _report('closed_forms.wavefunction', coeffs, max(wave_errors), WAVEFUNCTION_TOL,
                {'rows': rows}),
        pochhammer_form_report(),
    ]


def _hermite_closed_forms() -> List[VerificationReport]:
    coeffs = builtin_family(FamilyLabel.HERMITE)
    rows, errors = [], []
    for z in (0.5, 1.0 + 0.5j):
        for x in (-1.0, 0.0, 1.5):
            closed = hermite_closed_forms(z, x).wavefunction
            series = series_wavefunction(coeffs, z, x)
            errors.append(_relative(series, closed))
            rows.append({'z': z, 'x': x, 'series': series, 'closed_form': closed})
    return [_report('closed_forms.wavefunction', coeffs, max(errors), WAVEFUNCTION_TOL, {'rows': rows})]


def _chebyshev_closed_forms() -> List[VerificationReport]:
    coeffs = builtin_family(FamilyLabel.CHEBYSHEV_FIRST)
    rows, errors = [], []
    for z in (0.0, 0.3, 0.2 - 0.3j):
        for x in (-0.6, 0.0, 0.5):
            forms = chebyshev_closed_forms(z, x)
            series = series_wavefunction(coeffs, z, x)
            errors.append(_relative(series, forms.wavefunction))
            rows.append({'z': z, 'x': x, 'series': series, 'resummed': forms.wavefunction,
                         'printed_ratio': forms.printed_ratio})
    return [_report('closed_forms.wavefunction', coeffs, max(errors), CHEBYSHEV_TOL, {'rows': rows})]


def closed_forms_suite(options: SuiteOptions) -> List[VerificationReport]:
    reports = []
    if options.wants(FamilyLabel.HERMITE):
        reports.extend(_hermite_closed_forms())
    if options.wants(FamilyLabel.LAGUERRE):
        for alpha in options.alphas():
            reports.extend(_laguerre_closed_forms(alpha))
    if options.wants(FamilyLabel.LEGENDRE):
        reports.extend(_legendre_closed_forms())
    if options.wants(FamilyLabel.CHEBYSHEV_FIRST):
        reports.extend(_chebyshev_closed_forms())
    return reports


def _closed_overlap(coeffs: CoefficientSequence) -> Optional[Callable[[complex, complex], complex]]:
    if coeffs.family_label is FamilyLabel.LEGENDRE:
        return legendre_overlap
    if coeffs.family_label is FamilyLabel.LAGUERRE:
        alpha = coeffs.params['alpha']
        return lambda z1, z2: laguerre_overlap(alpha, z1, z2)
    return None


def overlap_suite(options: SuiteOptions) -> List[VerificationReport]:
    reports = []
    for coeffs in options.families():
        grid = z_grid(coeffs)
        closed = _closed_overlap(coeffs)
        bound_violation = 0.0
        symmetry_error = 0.0
        closed_errors = []
        printed_ratios = []
        for i, z1 in enumerate(grid):
            for j, z2 in enumerate(grid):
                value = overlap(coeffs, z1, z2)
                if i == j:
                    bound_violation = max(bound_violation, abs(value - 1.0))
                elif abs(value) >= 1.0 - 1e-12:
                    bound_violation = max(bound_violation, abs(value))
                if j > i:
                    symmetry_error = max(symmetry_error, abs(value - overlap(coeffs, z2, z1).conjugate()))
                if closed is not None:
                    closed_errors.append(_relative(value, closed(z1, z2)))
                if coeffs.family_label is FamilyLabel.LAGUERRE:
                    printed = laguerre_overlap_printed(coeffs.params['alpha'], z1, z2)
                    if printed:
                        printed_ratios.append({'z1': z1, 'z2': z2, 'ratio': value.real / printed})
        worst = max([bound_violation, symmetry_error] + closed_errors)
        details = {'grid': grid, 'bound_violation': bound_violation,
                   'hermitian_symmetry_error': symmetry_error}
        if closed_errors:
            details['closed_form_error'] = max(closed_errors)
        if printed_ratios:
            details['printed_ratios'] = printed_ratios
        reports.append(_report('overlap', coeffs, worst, OVERLAP_TOL, details))
    return reports


def unity_suite(options: SuiteOptions) -> List[VerificationReport]:
    reports = []
    if options.wants(FamilyLabel.HERMITE):
        reports.append(check_unity(builtin_family(FamilyLabel.HERMITE), hermite_measure(),
                                   10, HERMITE_UNITY_TOL))
    if options.wants(FamilyLabel.LAGUERRE):
        for alpha in options.alphas(UNITY_ALPHAS):
            report = check_unity(builtin_family(FamilyLabel.LAGUERRE, alpha=alpha),
                                 laguerre_measure(alpha), 8, LAGUERRE_UNITY_TOL)
            report.details['measure_normalizer'] = laguerre_normalizer_note(alpha)
            reports.append(report)
    if options.wants(FamilyLabel.LEGENDRE):
        reports.append(check_unity(builtin_family(FamilyLabel.LEGENDRE), legendre_measure(),
                                   6, LAGUERRE_UNITY_TOL))
    return reports


SUITES: Dict[str, Callable[[SuiteOptions], List[VerificationReport]]] = {
    'theorem1': theorem1_suite,
    'theorem2': theorem2_suite,
    'eigen': eigen_suite,
    'closed_forms': closed_forms_suite,
    'overlap': overlap_suite,
    'moments': moments_suite,
    'orthonormality': orthonormality_suite,
    'unity': unity_suite,
}


def _guarded(name: str, options: SuiteOptions) -> List[VerificationReport]:
    try:
        return SUITES[name](options)
    except (ConvergenceError, DomainError) as e:
        logger.error(f"suite {name} aborted: {e}")
        return [VerificationReport(
            check=name,
            family=options.family.value if options.family else 'all',
            params={'alpha': options.alpha} if options.alpha is not None else {},
            status=ReportStatus.FAIL,
            max_error=None,
            details={'error': f"{type(e).__name__}: {e}"},
        )]


def run_suites(names: List[str], options: SuiteOptions,
               workers: Optional[int] = None) -> List[VerificationReport]:
    """
    Run suites concurrently and return their reports in declaration order

    Args:
        names: Suite names, 'all' expands to every suite
        options: Family filter, dim and tolerance
        workers: Thread count (Config.WORKERS by default)
    """
    if 'all' in names:
        names = list(SUITE_NAMES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise GenOscError(f"Unknown suite(s): {', '.join(unknown)}")

    with ThreadPoolExecutor(max_workers=workers or Config.WORKERS) as pool:
        batches = list(pool.map(lambda name: _guarded(name, options), names))
    reports = [report for batch in batches for report in batch]
    logger.info(f"{len(reports)} reports from suites {', '.join(names)}")
    return reports
