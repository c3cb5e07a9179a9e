"""
Command handlers for the concavity CLI
"""

import sys
from typing import Any, Dict, Optional

import structlog

from ..services.verifier import GRID_COLUMNS, RadiusVerifier, build_function
from ..utils.config import Settings
from ..utils.errors import ConcavityError, InvalidParameter
from ..utils.file_handler import FileHandler
from ..utils.validation import ValidationUtils

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2
EXIT_VIOLATION = 3

CLASS_PARAMETERS = ('n', 'alpha', 'beta', 'lam', 'b')

validation = ValidationUtils()
file_handler = FileHandler()


def _usage_error(error: InvalidParameter) -> int:
    logger.error("Invalid input", parameter=error.parameter, error=str(error))
    sys.stderr.write(f"error: {error}\n")
    return EXIT_USAGE


def _numeric_error(error: ConcavityError) -> int:
    logger.error("Evaluation failed", error=str(error), kind=type(error).__name__)
    sys.stderr.write(f"error: {type(error).__name__}: {error}\n")
    return EXIT_NUMERIC


def _class_parameters(args: Any) -> Dict[str, Any]:
    return {name: getattr(args, name, None) for name in CLASS_PARAMETERS}


def _tol(args: Any, settings: Settings) -> Any:
    return args.tol if args.tol is not None else settings.bisection_tol


def cmd_radius(args: Any, settings: Settings) -> int:
    """Solver radius of one class as a JSON record"""
    try:
        query = validation.validate_query(args.class_id, _class_parameters(args), args.A, _tol(args, settings))
        record = RadiusVerifier(settings).radius(query)
    except InvalidParameter as e:
        return _usage_error(e)
    except ConcavityError as e:
        return _numeric_error(e)

    file_handler.write_json(record.to_dict(), args.output)
    return EXIT_OK if record.solver.get('converged') else EXIT_NUMERIC


def cmd_verify(args: Any, settings: Settings) -> int:
    """Solver radius against the empirical radius of the class extremal"""
    try:
        query = validation.validate_query(args.class_id, _class_parameters(args), args.A, _tol(args, settings))
        record = RadiusVerifier(settings).verify(query)
    except InvalidParameter as e:
        return _usage_error(e)
    except ConcavityError as e:
        return _numeric_error(e)

    file_handler.write_json(record.to_dict(), args.output)
    return EXIT_OK if record.solver.get('converged') else EXIT_NUMERIC


def cmd_scan(args: Any, settings: Settings) -> int:
    """Solver radius over a parameter grid, one CSV row per point"""
    try:
        class_id = validation.validate_class(args.class_id)
        axes = {
            name: validation.parse_grid(name, getattr(args, name))
            for name in CLASS_PARAMETERS
            if getattr(args, name, None) is not None and name in validation.allowed_parameters(class_id)
        }
        missing = [name for name in validation.required_parameters[class_id] if name not in axes]
        if missing:
            raise InvalidParameter(missing[0], f"grid required for class {class_id}")
        a_values = validation.parse_grid('A', args.A)
        tol = validation.validate_tol(_tol(args, settings))
    except InvalidParameter as e:
        return _usage_error(e)

    rows, columns = RadiusVerifier(settings).scan(class_id, axes, a_values, tol)
    file_handler.write_csv(rows, columns, args.output)

    if not any(row['converged'] for row in rows):
        logger.error("Every scan row failed", class_id=class_id, rows=len(rows))
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_grid(args: Any, settings: Settings) -> int:
    """Re T_f on a square grid for external plotting"""
    try:
        parameters: Dict[str, float] = {}
        for item in args.param or []:
            name, sep, raw = item.partition('=')
            if not sep or not name:
                raise InvalidParameter('param', f"expected name=value, got {item!r}")
            parameters[name] = validation.validate_number(name, raw)
        f = build_function(args.function, parameters)
        A = validation.validate_concavity_param(args.A)
        validation.validate_grid_request(args.r_max, args.resolution)
        rows = RadiusVerifier(settings).grid(f, A, float(args.r_max), int(args.resolution))
    except InvalidParameter as e:
        return _usage_error(e)
    except ConcavityError as e:
        return _numeric_error(e)

    file_handler.write_csv(rows, GRID_COLUMNS, args.output)
    return EXIT_OK


def cmd_witness_test(args: Any, settings: Settings) -> int:
    """Seeded lemma suite plus the lower-bound property"""
    try:
        class_id = validation.validate_class(args.class_id)
        if class_id not in ('s0n', 'close_to_star'):
            raise InvalidParameter('class', 'witness suites exist for s0n and close_to_star')
        n = validation.validate_number('n', args.n)
        A = validation.validate_concavity_param(args.A)
        count = validation.validate_number('count', args.count)
        seed: Optional[int] = None if args.seed is None else validation.validate_number('seed', args.seed)
        summary = RadiusVerifier(settings).witness_test(class_id, n, A, count, seed,
                                                        lower_bound=not args.skip_lower_bound)
    except InvalidParameter as e:
        return _usage_error(e)
    except ConcavityError as e:
        return _numeric_error(e)

    file_handler.write_json(summary.to_dict(), args.output)
    if not summary.passed:
        logger.warning("Witness suite found violations", **summary.to_dict())
        return EXIT_VIOLATION
    return EXIT_OK


COMMANDS = {
    'radius': cmd_radius,
    'scan': cmd_scan,
    'verify': cmd_verify,
    'grid': cmd_grid,
    'witness-test': cmd_witness_test,
}
