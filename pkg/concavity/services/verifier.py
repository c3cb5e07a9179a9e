"""
Class registry and the report engine behind the command-line surface
"""

import math
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import structlog

from ..models.functions import (
    CATALOG_BY_NAME, CatalogFunction, CloseToStarExtremal, FunctionSpec, GeneralizedKoebe,
    MeromorphicKp, Monomial, PowerDistortion, RotatedFunction, RotatedKoebe, Schild,
    SeriesFunction,
)
from ..models.phi import Phi1, Phi2, Phi3, Phi4, Phi6, PhiSpec, RadiusResult
from ..models.report import RadiusQuery, ReportRecord, WitnessSummary
from ..utils.config import DEFAULTS, Settings
from ..utils.errors import InvalidParameter, NoRoot, NoSignChange
from ..utils.validation import expand_grid
from .catalog import displayed_tf
from .concavity import CLOSE_TO_STAR_CEILING, DEFAULT_CEILING, TWO_PI, ConcavityAnalyzer, re_tf_samples
from .radius_solver import closed_form_root, least_root
from .witnesses import WitnessGenerator, verify_class_bound

logger = structlog.get_logger()

SCAN_COLUMNS = ('radius', 'converged', 'residual', 'iterations')
GRID_COLUMNS = ('x', 'y', 're_tf')


def class_phi(class_id: str, parameters: Dict[str, float], A: float) -> PhiSpec:
    """The radius-defining function of a class"""
    if class_id == 's0n':
        return Phi1(int(parameters['n']), A)
    if class_id == 'kab':
        return Phi2(parameters['alpha'], parameters['beta'], A)
    if class_id == 'strongly_starlike':
        return Phi3(parameters['beta'], A)
    if class_id == 'starlike_order':
        return Phi4(parameters['alpha'], A)
    if class_id == 'close_to_star':
        return Phi6(A)
    raise InvalidParameter('class', f"unknown class '{class_id}'")


def class_extremal(class_id: str, parameters: Dict[str, float]) -> FunctionSpec:
    """The function each sharpness claim is tested on"""
    if class_id == 's0n':
        n = int(parameters['n'])
        # z = -r orientation of z/(1 - z^n)^(2/n)
        return RotatedKoebe() if n == 1 else RotatedFunction(GeneralizedKoebe(n), math.pi)
    if class_id == 'kab':
        return PowerDistortion(parameters['alpha'], parameters['beta'])
    if class_id == 'strongly_starlike':
        return Monomial(parameters.get('lam', 1.0), int(parameters.get('n', 1)))
    if class_id == 'starlike_order':
        return Schild(parameters['alpha'], parameters.get('b', -1.0))
    if class_id == 'close_to_star':
        return CloseToStarExtremal()
    raise InvalidParameter('class', f"unknown class '{class_id}'")


def displayed_function(class_id: str, parameters: Dict[str, float]) -> Optional[CatalogFunction]:
    """Catalog entry whose quoted T_f expression is cross-checked"""
    if class_id == 's0n':
        return GeneralizedKoebe(int(parameters['n']))
    extremal = class_extremal(class_id, parameters)
    return extremal if isinstance(extremal, CatalogFunction) else None


def class_ceiling(class_id: str) -> float:
    return CLOSE_TO_STAR_CEILING if class_id == 'close_to_star' else DEFAULT_CEILING


def build_function(function_id: str, parameters: Dict[str, float]) -> FunctionSpec:
    """Function for the grid command; k_p lives outside the normalized class"""
    if function_id == 'identity':
        return SeriesFunction.identity()
    cls = CATALOG_BY_NAME.get(function_id)
    if cls is None:
        raise InvalidParameter('function', f"unknown function id '{function_id}'")
    if cls is MeromorphicKp:
        raise InvalidParameter('function', 'T_f is not defined for the meromorphic class')
    try:
        return cls(**{k: (int(v) if k == 'n' else v) for k, v in parameters.items()})
    except TypeError as e:
        raise InvalidParameter('function', f"bad parameters for {function_id}: {e}")


class RadiusVerifier:
    """Solver radii, sharpness verification, sweeps and grids"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or DEFAULTS
        self.analyzer = ConcavityAnalyzer(self.settings)

        # Verification thresholds
        self.thresholds = {
            'match': 1e-5,
            'expression': 1e-8,
        }

        self.expression_check_radius = 0.05
        self.expression_check_count = 8

    def solve(self, query: RadiusQuery) -> Tuple[RadiusResult, Optional[float], PhiSpec]:
        """Least root of the class Phi; a missing root comes back non-converged"""
        phi = class_phi(query.class_id, query.parameters, query.A)
        try:
            result = least_root(phi, query.tol, self.settings.scan_step)
        except NoRoot as e:
            result = e.result
        return result, closed_form_root(phi), phi

    def radius(self, query: RadiusQuery) -> ReportRecord:
        result, closed_form, _ = self.solve(query)
        record = ReportRecord(
            query=query.to_dict(),
            solver_radius=result.value,
            extremal_id=class_extremal(query.class_id, query.parameters).function_id,
            closed_form=closed_form,
            solver=result.to_dict(),
        )
        if not result.converged:
            record.add_flag('SOLVER_NO_ROOT')
        logger.info("Radius computed", query=query.to_dict(), value=result.value, converged=result.converged)
        return record

    def _empirical(self, f: FunctionSpec, A: float, ceiling: float, tol: float) -> RadiusResult:
        try:
            return self.analyzer.radius(f, A, ceiling, tol)
        except NoSignChange as e:
            return e.result

    def rotation_family(self, f: FunctionSpec) -> List[FunctionSpec]:
        """f followed by its rotations e^(-i t) f(e^(i t) z), t = 2 pi k / count"""
        count = self.settings.rotation_count
        return [f] + [RotatedFunction(f, TWO_PI * k / count) for k in range(1, count)]

    def expression_mismatch(self, c: CatalogFunction, A: float) -> Optional[float]:
        """Largest gap between the quoted T_f expression and the generic evaluator"""
        z = self.expression_check_radius * np.exp(
            2j * np.pi * np.arange(self.expression_check_count) / self.expression_check_count)
        displayed = displayed_tf(c, A, z)
        if displayed is None:
            return None
        return float(np.max(np.abs(displayed - self.analyzer.tf(c, A, z))))

    def verify(self, query: RadiusQuery) -> ReportRecord:
        """
        Compare the solver radius with the empirical radius of the extremal

        The empirical radius is the smallest over the extremal's rotation
        family. Evaluation failures propagate as ConcavityError.
        """
        record = self.radius(query)
        extremal = class_extremal(query.class_id, query.parameters)
        ceiling = class_ceiling(query.class_id)

        best: Optional[RadiusResult] = None
        best_f = extremal
        for member in self.rotation_family(extremal):
            result = self._empirical(member, query.A, ceiling, query.tol)
            if best is None or result.value < best.value:
                best, best_f = result, member

        record.empirical_radius = best.value
        record.empirical = best.to_dict()
        if best.value > 0.0:
            record.argmin_angle = self.analyzer.scan(best_f, query.A, best.value).argmin_angle

        delta = best.value - record.solver_radius
        if abs(delta) <= self.thresholds['match']:
            record.add_flag('MATCH')
        elif delta > 0.0:
            record.add_flag('EXTREMAL_LOOSE')
        else:
            record.add_flag('EXTREMAL_BELOW_BOUND')

        if not extremal.normalized:
            record.add_flag('NORMALIZATION_VIOLATION')

        shown = displayed_function(query.class_id, query.parameters)
        if shown is not None:
            gap = self.expression_mismatch(shown, query.A)
            if gap is not None and gap > self.thresholds['expression']:
                record.add_flag('PAPER_EXPR_MISMATCH')
                logger.warning("Displayed T_f disagrees with evaluator", function=shown.function_id, gap=gap)

        logger.info("Verification finished", query=query.to_dict(), flags=record.flags,
                    solver=record.solver_radius, empirical=record.empirical_radius)
        return record

    def scan(self, class_id: str, axes: Dict[str, List[float]], a_values: List[float],
             tol: Optional[float] = None) -> Tuple[List[Dict[str, Any]], List[str]]:
        """
        Solver radius over a parameter grid

        Returns:
            Rows in lexicographic grid order and the CSV header
        """
        tol = tol if tol is not None else self.settings.bisection_tol
        names = sorted(axes)
        columns = ['class'] + names + ['A'] + list(SCAN_COLUMNS)
        rows: List[Dict[str, Any]] = []

        for point in expand_grid(axes):
            for A in sorted(a_values):
                row: Dict[str, Any] = {'class': class_id, **point, 'A': A}
                try:
                    phi = class_phi(class_id, point, A)
                    try:
                        result = least_root(phi, tol, self.settings.scan_step)
                    except NoRoot as e:
                        result = e.result
                    row.update(radius=result.value, converged=result.converged,
                               residual=result.residual, iterations=result.iterations)
                except (InvalidParameter, KeyError) as e:
                    logger.warning("Scan point rejected", class_id=class_id, point=point, A=A, error=str(e))
                    row.update(radius=None, converged=False, residual=None, iterations=None)
                rows.append(row)

        return rows, columns

    def grid(self, f: FunctionSpec, A: float, r_max: float, resolution: int) -> List[Dict[str, Any]]:
        """Re T_f on a row-major square grid; cells off the disk or singular stay empty"""
        axis = np.linspace(-r_max, r_max, resolution)
        x, y = np.meshgrid(axis, axis)
        z = (x + 1j * y).ravel()
        inside = np.abs(z) <= r_max

        values = np.full(z.shape, np.nan)
        if np.any(inside):
            values[inside] = re_tf_samples(f, A, z[inside], self.settings.evaluation_radius)

        return [
            {'x': float(xi), 'y': float(yi), 're_tf': None if math.isnan(v) else float(v)}
            for xi, yi, v in zip(x.ravel(), y.ravel(), values)
        ]

    def witness_test(self, class_id: str, n: int, A: float, count: int,
                     seed: Optional[int] = None, lower_bound: bool = True) -> WitnessSummary:
        if count < 1:
            raise InvalidParameter('count', 'requires count >= 1')
        generator = WitnessGenerator(self.settings, seed)
        witnesses = list(generator.witnesses(n, count))
        return verify_class_bound(class_id, witnesses, A, n, generator, lower_bound)
