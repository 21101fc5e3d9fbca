"""
Moment Identity Check
Nested coefficient sums alpha_{2p-1, n-1} and the moment identity that links
symmetric moments to b^2_{n-1} + b^2_n
"""
import logging
from fractions import Fraction
from typing import Dict, List, Union

from errors import DomainError, FamilyError, InsufficientDataError
from moments.jacobi import MomentTable, moment_via_jacobi
from recurrence.families import CoefficientSequence, gen_factorial
from verification.report import ReportStatus, VerificationReport

logger = logging.getLogger(__name__)

Number = Union[float, Fraction]

# tolerated |mu_0 - 1| before a moment table is rejected
MU0_TOL = 1e-10


def _check_alpha_domain(p: int, n: int):
    if p < 1 or n < 2 * p - 1:
        raise DomainError(f"alpha_coeff needs p >= 1 and n >= 2p-1, got p={p}, n={n}")


def _b_squared_list(coeffs: CoefficientSequence, n: int, exact: bool) -> List[Number]:
    if exact:
        return [coeffs.b_squared_exact(k) for k in range(n)]
    return [coeffs.b_squared(k) for k in range(n)]


def alpha_coeff(coeffs: CoefficientSequence, p: int, n: int, exact: bool = False) -> Number:
    """
    Nested sum alpha_{2p-1, n-1}

        sum_{k_1=2p-1}^{n-1} b^2_{k_1} sum_{k_2=2p-3}^{k_1-2} b^2_{k_2} ... sum_{k_p=1}^{k_{p-1}-2} b^2_{k_p}

    Evaluated by dynamic programming over depth: level j keeps the running
    sums F_j(u) = sum_{k=lower_j}^{u} b^2_k F_{j+1}(k-2), innermost level first.

    Args:
        coeffs: Recurrence data
        p: Nesting depth, p >= 1
        n: Upper index, n >= 2p-1
        exact: Use Fraction arithmetic (rational families only)

    Returns:
        Value of the nested sum (Fraction when exact)
    """
    _check_alpha_domain(p, n)
    b2 = _b_squared_list(coeffs, n, exact)
    zero, one = (Fraction(0), Fraction(1)) if exact else (0.0, 1.0)

    inner: List[Number] = []
    for depth in range(p, 0, -1):
        lower = 2 * (p - depth) + 1
        current: List[Number] = [zero] * n
        running = zero
        for u in range(lower, n):
            carry = one if depth == p else inner[u - 2]
            running += b2[u] * carry
            current[u] = running
        inner = current
    return inner[n - 1]


def alpha_coeff_enumerated(coeffs: CoefficientSequence, p: int, n: int,
                           exact: bool = False) -> Number:
    """Same nested sum by walking every admissible index tuple k_1 > k_2 + 1 > ..."""
    _check_alpha_domain(p, n)
    b2 = _b_squared_list(coeffs, n, exact)
    zero, one = (Fraction(0), Fraction(1)) if exact else (0.0, 1.0)

    def walk(depth: int, upper: int, product: Number) -> Number:
        if depth > p:
            return product
        lower = 2 * (p - depth) + 1
        total = zero
        for k in range(lower, upper + 1):
            total += walk(depth + 1, k - 2, product * b2[k])
        return total

    return walk(1, n - 1, one)


def _validate_moments(coeffs: CoefficientSequence, moments: MomentTable, n_max: int):
    if not coeffs.symmetric:
        raise FamilyError(f"{coeffs.name}: the moment identity is stated for symmetric families only")
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}")
    if abs(moments[0] - 1.0) > MU0_TOL:
        raise InsufficientDataError(f"Moment table is not normalized: mu_0 = {moments[0]!r}")
    needed = 2 * n_max + 3
    if len(moments) < needed:
        raise InsufficientDataError(
            f"check needs moments mu_0..mu_{needed - 1}, table stops at mu_{moments.k_max}"
        )


def _identity_left_side(coeffs: CoefficientSequence, moments: MomentTable, n: int) -> float:
    half = n // 2
    weights = [1.0] + [alpha_coeff(coeffs, m, n) for m in range(1, half + 1)]
    total = 0.0
    for m in range(half + 1):
        for s in range(half + 1):
            sign = -1.0 if (m + s) % 2 else 1.0
            total += sign * weights[m] * weights[s] * moments[2 * n - 2 * m - 2 * s + 2]
    return total / gen_factorial(coeffs, n - 1, 1.0)


def _oracle_section(coeffs: CoefficientSequence, moments: MomentTable, tol: float) -> Dict:
    errors = []
    for k in range(len(moments)):
        reference = moment_via_jacobi(coeffs, k, k // 2 + 2)
        errors.append(abs(moments[k] - reference) / max(1.0, abs(reference)))
    worst = max(errors)
    return {
        'identity': 'mu_k = <e_0, J^k e_0>',
        'k_max': moments.k_max,
        'max_error': worst,
        'tol': tol,
        'passed': worst < tol,
    }


def check_theorem1(coeffs: CoefficientSequence, moments: MomentTable,
                   n_max: int, tol: float) -> VerificationReport:
    """
    Evaluate the moment identity

        sum_{m,s=0}^{[n/2]} (-1)^{m+s} alpha_{2m-1,n-1} alpha_{2s-1,n-1}
            mu_{2n-2m-2s+2} / (b^2_{n-1})!  =  b^2_{n-1} + b^2_n

    for n = 0..n_max, with alpha_{-1, .} = 1 and (b^2_{n-1})! the unscaled
    generalized factorial. The printed identity does not balance, so the
    report carries residuals only; the moment table itself is cross-checked
    against the Jacobi-matrix moments in the oracle section.

    Args:
        coeffs: Symmetric recurrence data
        moments: Table covering mu_0..mu_{2 n_max + 2}
        n_max: Largest n evaluated
        tol: Tolerance of the oracle section

    Returns:
        VerificationReport with status REPORT
    """
    _validate_moments(coeffs, moments, n_max)

    rows = []
    for n in range(n_max + 1):
        lhs = _identity_left_side(coeffs, moments, n)
        rhs = coeffs.b_squared(n - 1) + coeffs.b_squared(n)
        residual = lhs - rhs
        rows.append({'n': n, 'lhs': lhs, 'rhs': rhs, 'residual': residual,
                     'relative_residual': abs(residual) / max(abs(rhs), 1e-300)})

    oracle = _oracle_section(coeffs, moments, tol)
    if not oracle['passed']:
        logger.warning(f"{coeffs.name}: moment table disagrees with J^k corner entries "
                       f"(max error {oracle['max_error']:.3e})")
    worst = max(abs(row['residual']) for row in rows)
    logger.info(f"{coeffs.name}: moment identity residual up to {worst:.3e} for n <= {n_max}")

    return VerificationReport(
        check='theorem1',
        family=coeffs.family_label.value,
        params=dict(coeffs.params),
        status=ReportStatus.REPORT,
        max_error=worst,
        details={
            'moment_source': moments.source.value,
            'reading': {
                'outer_sums': 'm, s = 0..floor(n/2)',
                'alpha_for_zero': 1,
                'denominator': 'prod_{k<n-1} b_k^2',
                'moment_index': '2n - 2m - 2s + 2',
            },
            'rows': rows,
            'oracle_identity': oracle,
        },
    )
