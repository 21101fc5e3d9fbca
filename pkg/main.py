#!/usr/bin/env python3
"""
GenOsc - Main Entry Point
Evaluate, tabulate and verify generalized oscillators and their coherent states

Exit codes: 0 success, 1 numeric failure or failed asserted check,
2 bad arguments, unknown family or argument outside a domain.
"""
import argparse
import logging
import math
import re
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import Config
from errors import (
    ConvergenceError, DomainError, FamilyError, GenOscError, InsufficientDataError, VerificationError
)
from recurrence import FamilyLabel, builtin_family, eval_poly_table, parse_family_label
from coherent import (
    chebyshev_closed_forms, coherent_state, hermite_closed_forms,
    laguerre_closed_forms, legendre_closed_forms, series_wavefunction
)
from ui import SummaryPrinter, emit, render_reports, write_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NUMERIC = 1
EXIT_USAGE = 2

# wavefunction grids inside each family's support; Laguerre lives on x > 0
WAVEFUNCTION_GRIDS = {
    FamilyLabel.HERMITE: (-2.0, 2.0, 9),
    FamilyLabel.LAGUERRE: (0.25, 4.0, 7),
}
DEFAULT_WAVEFUNCTION_GRID = (-0.9, 0.9, 7)

_NUMBER = r'(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?'
_COMPLEX_FULL = re.compile(rf'^(?P<re>[+-]?{_NUMBER})(?P<im>[+-]{_NUMBER})i$')
_COMPLEX_REAL = re.compile(rf'^(?P<re>[+-]?{_NUMBER})$')
_COMPLEX_IMAG = re.compile(rf'^(?P<im>[+-]?{_NUMBER})i$')


def parse_complex(text: str) -> complex:
    """Parse 'a+bi', 'a-bi', 'a' or 'bi' (no spaces)"""
    text = text.strip()
    match = _COMPLEX_FULL.match(text)
    if match:
        return complex(float(match['re']), float(match['im']))
    match = _COMPLEX_REAL.match(text)
    if match:
        return complex(float(match['re']), 0.0)
    match = _COMPLEX_IMAG.match(text)
    if match:
        return complex(0.0, float(match['im']))
    raise argparse.ArgumentTypeError(f"malformed complex literal '{text}' (expected a+bi)")


def parse_grid(text: str) -> Tuple[float, float, int]:
    """Parse 'start:stop:count' with count >= 2"""
    parts = text.split(':')
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"malformed grid '{text}' (expected start:stop:count)")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed grid '{text}' (expected start:stop:count)") from None
    if count < 2:
        raise argparse.ArgumentTypeError(f"grid count must be at least 2, got {count}")
    return start, stop, count


def parse_family(text: str) -> FamilyLabel:
    try:
        return parse_family_label(text)
    except FamilyError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


@dataclass
class RunConfig:
    """Everything one CLI invocation needs"""
    command: str
    family: Optional[FamilyLabel] = None
    params: Dict[str, float] = field(default_factory=dict)
    z: complex = 0j
    grid: Tuple[float, float, int] = (-1.0, 1.0, 5)
    n: int = 5
    dim: Optional[int] = None
    tol: float = field(default_factory=lambda: Config.DEFAULT_TOL)
    mode: str = "coeffs"
    suites: List[str] = field(default_factory=lambda: ['all'])
    output_format: str = "csv"
    output_path: Optional[str] = None

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError(f"tol must be positive, got {self.tol}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunConfig':
        params = {}
        if getattr(args, 'alpha', None) is not None:
            params['alpha'] = args.alpha
        family = getattr(args, 'family', None)
        grid = getattr(args, 'grid', None)
        if grid is None and args.command == 'coherent':
            grid = WAVEFUNCTION_GRIDS.get(family, DEFAULT_WAVEFUNCTION_GRID)
        tol = getattr(args, 'tol', None)
        return cls(
            command=args.command,
            family=family,
            params=params,
            z=getattr(args, 'z', 0j),
            grid=grid or (-1.0, 1.0, 5),
            n=getattr(args, 'n', 5),
            dim=getattr(args, 'dim', None),
            tol=Config.DEFAULT_TOL if tol is None else tol,
            mode=getattr(args, 'mode', 'coeffs'),
            suites=getattr(args, 'suite', None) or ['all'],
            output_format=getattr(args, 'format', 'csv'),
            output_path=getattr(args, 'out', None),
        )

    def grid_points(self) -> np.ndarray:
        start, stop, count = self.grid
        return np.linspace(start, stop, count)

    def coefficients(self):
        return builtin_family(self.family, **self.params)


def cmd_poly_eval(config: RunConfig) -> int:
    """Table of x, Psi_0(x) .. Psi_n(x) over the grid"""
    coeffs = config.coefficients()
    if config.n < 0:
        raise DomainError(f"--n must be nonnegative, got {config.n}")
    xs = config.grid_points()
    table = eval_poly_table(coeffs, config.n, xs)
    header = ['x'] + [f"psi_{k}" for k in range(config.n + 1)]
    rows = [[x] + list(table[:, i]) for i, x in enumerate(xs)]
    write_table(header, rows, config.output_format, config.output_path)
    return EXIT_OK


def _closed_form(label: FamilyLabel, params: Dict[str, float], z: complex, x: float) -> complex:
    if label is FamilyLabel.HERMITE:
        return hermite_closed_forms(z, x).wavefunction
    if label is FamilyLabel.LAGUERRE:
        return laguerre_closed_forms(params.get('alpha', 0.0), z, x).wavefunction
    if label is FamilyLabel.LEGENDRE:
        return legendre_closed_forms(z, x).wavefunction
    return chebyshev_closed_forms(z, x).wavefunction


def cmd_coherent(config: RunConfig) -> int:
    """Coefficients c_n, or the wavefunction next to its closed form"""
    coeffs = config.coefficients()
    if config.mode == "coeffs":
        state = coherent_state(coeffs, config.z, config.dim)
        rows = [[n, c.real, c.imag] for n, c in enumerate(state.coefficients)]
        write_table(['n', 'c_n_re', 'c_n_im'], rows, config.output_format, config.output_path)
        return EXIT_OK

    rows = []
    for x in config.grid_points():
        series = series_wavefunction(coeffs, config.z, float(x), config.dim)
        try:
            closed = _closed_form(coeffs.family_label, coeffs.params, config.z, float(x))
        except (DomainError, ConvergenceError) as e:
            logger.warning(f"closed form unavailable at x={x:g}: {e}")
            closed = complex(math.nan, math.nan)
        rows.append([x, series.real, series.imag, closed.real, closed.imag, abs(series - closed)])
    header = ['x', 'series_re', 'series_im', 'closed_form_re', 'closed_form_im', 'abs_diff']
    write_table(header, rows, config.output_format, config.output_path)
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    """JSON array of reports; exit 0 iff every asserted check passes"""
    from verification import assert_passed
    from verification.suites import SuiteOptions, run_suites

    dim = config.dim or 64
    if dim > Config.MAX_DIM:
        logger.warning(f"--dim {dim} capped at MAX_DIM={Config.MAX_DIM}")
        dim = Config.MAX_DIM
    options = SuiteOptions(family=config.family, alpha=config.params.get('alpha'),
                           dim=dim, tol=config.tol)
    reports = run_suites(config.suites, options)
    emit(render_reports(reports), config.output_path)
    SummaryPrinter().print_summary(reports)
    assert_passed(reports)
    return EXIT_OK


def cmd_config(config: RunConfig) -> int:
    """Effective configuration as YAML"""
    emit(Config.to_yaml(), config.output_path)
    return EXIT_OK


COMMANDS = {
    'poly': cmd_poly_eval,
    'coherent': cmd_coherent,
    'verify': cmd_verify,
    'config': cmd_config,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='genosc',
        description='Generalized oscillators and coherent states from recurrence coefficients',
        epilog='Negative literals need the = form, e.g. --grid=-1:1:5 or --z=-0.3+0i',
    )
    parser.add_argument('--verbose', '-v', action='store_true', help='log progress to stderr')
    sub = parser.add_subparsers(dest='command', required=True)

    def add_family(p, required=True):
        p.add_argument('--family', type=parse_family, required=required,
                       help='hermite, laguerre, legendre or chebyshev')
        p.add_argument('--alpha', type=float, default=None, help='Laguerre parameter (> -1)')

    def add_output(p):
        p.add_argument('--format', choices=['csv', 'json'], default='csv')
        p.add_argument('--out', default=None, help='write to this file instead of stdout')

    poly = sub.add_parser('poly', help='tabulate orthonormal polynomials')
    add_family(poly)
    poly.add_argument('--n', type=int, default=5, help='highest degree')
    poly.add_argument('--grid', type=parse_grid, default=(-1.0, 1.0, 5), help='start:stop:count')
    add_output(poly)

    coherent = sub.add_parser('coherent', help='coherent-state coefficients or wavefunction')
    add_family(coherent)
    coherent.add_argument('--z', type=parse_complex, required=True, help='complex point a+bi')
    coherent.add_argument('--mode', choices=['coeffs', 'wavefunction'], default='coeffs')
    coherent.add_argument('--dim', type=int, default=None, help='Fock truncation (automatic if omitted)')
    coherent.add_argument('--grid', type=parse_grid, default=None,
                          help='start:stop:count (default depends on the family)')
    add_output(coherent)

    verify = sub.add_parser('verify', help='run verification suites')
    verify.add_argument('--suite', action='append',
                        choices=['all', 'theorem1', 'theorem2', 'eigen', 'closed_forms',
                                 'overlap', 'moments', 'orthonormality', 'unity'],
                        help='suite to run (repeatable, default all)')
    add_family(verify, required=False)
    verify.add_argument('--dim', type=int, default=None, help='truncation for operator checks (64)')
    verify.add_argument('--tol', type=float, default=None, help='tolerance of tol-driven checks')
    verify.add_argument('--out', default=None, help='write the JSON reports to this file')

    config = sub.add_parser('config', help='print the effective configuration as YAML')
    config.add_argument('--out', default=None)
    return parser


def setup_logging(verbose: bool):
    logging.basicConfig(
        level=logging.INFO if verbose or Config.VERBOSE_LOGGING else logging.WARNING,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    setup_logging(args.verbose)

    try:
        config = RunConfig.from_args(args)
        return COMMANDS[config.command](config)
    except (FamilyError, DomainError, InsufficientDataError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except GenOscError as e:
        logger.error(f"Numeric failure: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
