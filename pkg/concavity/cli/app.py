"""
Concavity radius toolkit - command-line entry point
"""

import argparse
import sys
from typing import List, Optional

import structlog

from .. import __version__
from ..models.report import CLASS_IDS
from ..utils.config import CONFIG_ENV_VAR, DEFAULTS, load_settings
from ..utils.errors import InvalidParameter
from ..utils.logging import configure_logging
from .commands import COMMANDS, EXIT_USAGE

logger = structlog.get_logger()


class CommandParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _defaults_epilog() -> str:
    return (
        f"Configuration: flags > ${CONFIG_ENV_VAR} (KEY=value file) > defaults. "
        f"Defaults: TRUNCATION_ORDER={DEFAULTS.truncation_order}, "
        f"EVALUATION_RADIUS={DEFAULTS.evaluation_radius}, CIRCLE_SAMPLES={DEFAULTS.circle_samples}, "
        f"BISECTION_TOL={DEFAULTS.bisection_tol}, SCAN_STEP={DEFAULTS.scan_step}, "
        f"WITNESS_SEED={DEFAULTS.witness_seed}, MAX_BLASCHKE_ZEROS={DEFAULTS.max_blaschke_zeros}, "
        f"BLASCHKE_RADIUS={DEFAULTS.blaschke_radius}, ROTATION_COUNT={DEFAULTS.rotation_count}, "
        f"CONCAVITY_LOG_LEVEL={DEFAULTS.log_level}. "
        "Exit codes: 0 success, 1 usage error, 2 non-convergence or evaluation failure, 3 property violation."
    )


def _add_settings_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group('numerical settings')
    group.add_argument('--truncation-order', dest='truncation_order', help='series order N')
    group.add_argument('--evaluation-radius', dest='evaluation_radius', help='largest |z| for series')
    group.add_argument('--circle-samples', dest='circle_samples', help='angles per circle scan')
    group.add_argument('--scan-step', dest='scan_step', help='forward step of the least-root scan')
    group.add_argument('--rotation-count', dest='rotation_count', help='rotations tried by verify')
    group.add_argument('--log-level', dest='log_level', help='structured log level on stderr')


def _add_class_flags(parser: argparse.ArgumentParser, grid: bool = False) -> None:
    kind = 'grid (a,b,c or start:stop:count)' if grid else 'value'
    parser.add_argument('--class', dest='class_id', required=True, help=f"one of {', '.join(CLASS_IDS)}")
    parser.add_argument('--n', help=f"order n, {kind}")
    parser.add_argument('--alpha', help=f"alpha, {kind}")
    parser.add_argument('--beta', help=f"beta, {kind}")
    parser.add_argument('--lam', help=f"lambda of the monomial extremal, {kind}")
    parser.add_argument('--b', help=f"b of the Schild extremal, {kind}")
    parser.add_argument('--A', dest='A', required=True, help=f"concavity parameter in (1, 2], {kind}")
    parser.add_argument('--tol', help='bisection tolerance (>= 1e-14)')
    parser.add_argument('--output', '-o', help='output file (default: stdout)')


def build_parser() -> CommandParser:
    parser = CommandParser(
        prog='concavity',
        description='Radii of concavity for classes of analytic functions, with numerical verification',
        epilog=_defaults_epilog(),
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest='command', parser_class=CommandParser)
    subparsers.required = True

    radius = subparsers.add_parser('radius', help='solver radius of a class (JSON)', epilog=_defaults_epilog())
    _add_class_flags(radius)
    _add_settings_flags(radius)

    scan = subparsers.add_parser('scan', help='solver radius over a parameter grid (CSV)',
                                 epilog=_defaults_epilog())
    _add_class_flags(scan, grid=True)
    _add_settings_flags(scan)

    verify = subparsers.add_parser('verify', help='compare the solver with the class extremal (JSON)',
                                   epilog=_defaults_epilog())
    _add_class_flags(verify)
    _add_settings_flags(verify)

    grid = subparsers.add_parser('grid', help='Re T_f on a square grid (CSV)', epilog=_defaults_epilog())
    grid.add_argument('--function', required=True, help='identity or a catalog function id')
    grid.add_argument('--param', action='append', help='function parameter name=value (repeatable)')
    grid.add_argument('--A', dest='A', required=True, help='concavity parameter in (1, 2]')
    grid.add_argument('--r-max', dest='r_max', required=True, help='half-width of the grid, < 1')
    grid.add_argument('--resolution', required=True, help='points per axis, <= 4096')
    grid.add_argument('--output', '-o', help='output file (default: stdout)')
    _add_settings_flags(grid)

    witness = subparsers.add_parser('witness-test', help='seeded lemma and lower-bound suite (JSON)',
                                    epilog=_defaults_epilog())
    witness.add_argument('--class', dest='class_id', required=True, help='s0n or close_to_star')
    witness.add_argument('--n', default='1', help='vanishing order of the Schwarz function')
    witness.add_argument('--A', dest='A', default='2', help='concavity parameter in (1, 2]')
    witness.add_argument('--count', default='100', help='number of witnesses')
    witness.add_argument('--seed', help=f"random seed (default WITNESS_SEED={DEFAULTS.witness_seed})")
    witness.add_argument('--skip-lower-bound', dest='skip_lower_bound', action='store_true',
                         help='lemma checks only')
    witness.add_argument('--output', '-o', help='output file (default: stdout)')
    _add_settings_flags(witness)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, load settings and dispatch to a command"""
    args = build_parser().parse_args(argv)
    configure_logging(DEFAULTS.log_level)

    overrides = {
        name: getattr(args, name, None)
        for name in ('truncation_order', 'evaluation_radius', 'circle_samples', 'scan_step',
                     'rotation_count', 'log_level')
    }
    try:
        settings = load_settings(overrides)
    except InvalidParameter as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE

    configure_logging(settings.log_level)
    logger.debug("Command started", command=args.command)
    return COMMANDS[args.command](args, settings)


if __name__ == '__main__':
    sys.exit(main())
