"""
Concavity functionals T_f and P_f, circle scans and empirical radii
"""

import math
from typing import Any, Optional

import numpy as np
from scipy.optimize import minimize_scalar
import structlog

from ..models.functions import FunctionSpec, SeriesFunction, as_complex
from ..models.phi import RadiusResult, check_concavity_param
from ..models.scan import CircleScan, PoleLimit
from ..utils.config import DEFAULTS, Settings
from ..utils.errors import ConcavityError, InvalidParameter, NearPole, NoConvergence, NoSignChange
from .catalog import evaluate
from .jet_core import DIVIDE_TOL, Jet2

logger = structlog.get_logger()

TWO_PI = 2.0 * math.pi
POLE_TOL = 1e-12
START_RADIUS = 1e-3
DEFAULT_CEILING = 0.999
CLOSE_TO_STAR_CEILING = math.sqrt(2.0) - 1.0 - 1e-9


def check_pole_param(p: float) -> float:
    if not 0.0 < p < 1.0:
        raise InvalidParameter('p', 'requires 0 < p < 1')
    return float(p)


def _check_disk(z: Any) -> None:
    if np.any(np.abs(z) >= 1.0):
        raise InvalidParameter('z', 'requires |z| < 1')


def _z_f2_over_f1(jet: Jet2, z: Any) -> Any:
    """z f''/f' with the divide tolerance applied to f'"""
    numerator = z * jet.d2f
    if np.any(np.abs(jet.df) <= DIVIDE_TOL * (1.0 + np.abs(numerator))):
        raise NearPole("f' vanishes at the evaluation point")
    return numerator / jet.df


def eval_Tf(f: FunctionSpec, A: float, z: Any, evaluation_radius: float = DEFAULTS.evaluation_radius) -> Any:
    """
    T_f(z) = 2/(A-1) [ (A+1)/2 (1+z)/(1-z) - 1 - z f''(z)/f'(z) ]

    Args:
        f: function specification
        A: concavity parameter, 1 < A <= 2
        z: point(s) of the open unit disk

    Returns:
        Complex value(s) of T_f
    """
    A = check_concavity_param(A)
    z = as_complex(z)
    _check_disk(z)
    jet = evaluate(f, z, evaluation_radius)
    ratio = _z_f2_over_f1(jet, z)
    # (A+1)/2 (1+z)/(1-z) - 1 = (A-1)/2 + (A+1) z/(1-z); exact 1 at the origin
    return 1.0 + 2.0 / (A - 1.0) * ((A + 1.0) * z / (1.0 - z) - ratio)


def eval_Pf(f: FunctionSpec, p: float, z: Any, evaluation_radius: float = DEFAULTS.evaluation_radius) -> Any:
    """P_f(z) = -(1 + z f''/f' + (z+p)/(z-p) - (1+pz)/(1-pz)); the pole itself needs limit_Pf_at_pole"""
    p = check_pole_param(p)
    z = as_complex(z)
    _check_disk(z)
    if np.any(np.abs(z - p) <= POLE_TOL):
        raise NearPole("P_f evaluated at its pole; use limit_Pf_at_pole")

    jet = evaluate(f, z, evaluation_radius)
    ratio = _z_f2_over_f1(jet, z)
    return -(1.0 + ratio + (z + p) / (z - p) - (1.0 + p * z) / (1.0 - p * z))


def limit_Pf_at_pole(f: FunctionSpec, p: float, tolerance: float = 1e-6) -> PoleLimit:
    """
    Richardson-extrapolated limit of P_f along z = p (1 - 10^-k), k = 3..8

    Raises:
        NoConvergence: when the last two extrapolants differ by more than tolerance
    """
    p = check_pole_param(p)
    values = [complex(eval_Pf(f, p, p * (1.0 - 10.0 ** -k))) for k in range(3, 9)]
    # step shrinks tenfold each time; removes the linear term
    extrapolants = [(10.0 * fine - coarse) / 9.0 for coarse, fine in zip(values, values[1:])]
    error = abs(extrapolants[-1] - extrapolants[-2])

    if not math.isfinite(error) or error > tolerance:
        logger.warning("Pole limit did not settle", p=p, error=error)
        raise NoConvergence(f"P_f extrapolants differ by {error:.3e} at p={p}")

    return PoleLimit(extrapolants[-1], error)


def eval_kp(p: float, z: Any) -> Any:
    """k_p(z) = -p z / ((z - p)(1 - p z))"""
    p = check_pole_param(p)
    denominator = (z - p) * (1.0 - p * z)
    if np.any(np.abs(denominator) <= DIVIDE_TOL):
        raise NearPole("k_p evaluated at a pole")
    return -p * z / denominator


def re_tf_samples(f: FunctionSpec, A: float, zs: np.ndarray, evaluation_radius: float) -> np.ndarray:
    """Re T_f on an array of points; failing points come back as NaN"""
    try:
        with np.errstate(all='ignore'):
            values = np.real(eval_Tf(f, A, zs, evaluation_radius))
    except ConcavityError:
        values = np.empty(zs.shape)
        for i, z in enumerate(zs):
            try:
                values[i] = np.real(eval_Tf(f, A, complex(z), evaluation_radius))
            except ConcavityError:
                values[i] = np.nan
    return np.where(np.isfinite(values), values, np.nan)


def min_re_Tf_on_circle(f: FunctionSpec, A: float, r: float, samples: int = DEFAULTS.circle_samples,
                        evaluation_radius: float = DEFAULTS.evaluation_radius) -> CircleScan:
    """
    Minimum of Re T_f over |z| = r

    Dense uniform sampling, then bounded golden-section refinement over
    three angular steps either side of each of the best three samples.
    """
    if not 0.0 < r < 1.0:
        raise InvalidParameter('r', 'requires 0 < r < 1')
    if samples < 256:
        raise InvalidParameter('samples', 'requires at least 256 samples')

    step = TWO_PI / samples
    thetas = step * np.arange(samples)
    values = re_tf_samples(f, A, r * np.exp(1j * thetas), evaluation_radius)

    excluded = int(np.count_nonzero(np.isnan(values)))
    if excluded == samples:
        raise NearPole(f"Re T_f undefined at every sample on |z|={r}")

    ranked = np.argsort(np.where(np.isnan(values), np.inf, values), kind='stable')
    best_index = int(ranked[0])
    min_value = float(values[best_index])
    argmin = float(thetas[best_index])

    def objective(theta: float) -> float:
        try:
            value = float(np.real(eval_Tf(f, A, r * complex(math.cos(theta), math.sin(theta)),
                                          evaluation_radius)))
        except ConcavityError:
            return math.inf
        return value if math.isfinite(value) else math.inf

    refined = excluded <= 0.01 * samples
    for index in ranked[:3]:
        centre = float(thetas[index])
        result = minimize_scalar(objective, bounds=(centre - 3.0 * step, centre + 3.0 * step),
                                 method='bounded', options={'xatol': 1e-12})
        if result.success and result.fun < min_value:
            min_value = float(result.fun)
            argmin = float(result.x)

    if not refined:
        logger.warning("Circle scan excluded too many samples", r=r, excluded=excluded, samples=samples)

    return CircleScan(r=r, samples=samples, min_value=min_value,
                      argmin_angle=float(np.mod(argmin, TWO_PI)), refined=refined, excluded=excluded)


def empirical_concavity_radius(f: FunctionSpec, A: float, tol: float = DEFAULTS.bisection_tol,
                               ceiling: float = DEFAULT_CEILING, samples: int = DEFAULTS.circle_samples,
                               coarse_step: float = 0.01,
                               evaluation_radius: float = DEFAULTS.evaluation_radius) -> RadiusResult:
    """
    Largest r with Re T_f > 0 on |z| < r, for one function

    Forward coarse scan on r from 1e-3 to the first non-positive circle
    minimum, then bisection to a bracket of width <= tol.

    Raises:
        NoSignChange: circle minimum still positive at the ceiling; the
            exception carries the non-converged result
    """
    A = check_concavity_param(A)
    if isinstance(f, SeriesFunction):
        ceiling = min(ceiling, evaluation_radius)

    def circle_min(r: float) -> float:
        return min_re_Tf_on_circle(f, A, r, samples, evaluation_radius).min_value

    start = circle_min(START_RADIUS)
    if start <= 0.0:
        logger.warning("Circle minimum not positive at start radius", r=START_RADIUS, min_value=start)
        return RadiusResult(0.0, 0.0, START_RADIUS, abs(start), 0, False)

    lo, hi = START_RADIUS, None
    iterations = 0
    while lo < ceiling:
        candidate = min(lo + coarse_step, ceiling)
        iterations += 1
        if circle_min(candidate) <= 0.0:
            hi = candidate
            break
        lo = candidate

    if hi is None:
        residual = abs(circle_min(ceiling))
        result = RadiusResult(ceiling, lo, ceiling, residual, iterations, False)
        logger.warning("No sign change before ceiling", ceiling=ceiling)
        raise NoSignChange(f"Re T_f stays positive up to r={ceiling}", result)

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        iterations += 1
        if circle_min(mid) > 0.0:
            lo = mid
        else:
            hi = mid

    value = 0.5 * (lo + hi)
    result = RadiusResult(value, lo, hi, abs(circle_min(value)), iterations, hi - lo <= tol)
    logger.info("Empirical concavity radius", value=value, iterations=iterations, converged=result.converged)
    return result


class ConcavityAnalyzer:
    """Concavity evaluations bound to one set of numerical settings"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or DEFAULTS

    def tf(self, f: FunctionSpec, A: float, z: Any) -> Any:
        return eval_Tf(f, A, z, self.settings.evaluation_radius)

    def scan(self, f: FunctionSpec, A: float, r: float) -> CircleScan:
        return min_re_Tf_on_circle(f, A, r, self.settings.circle_samples, self.settings.evaluation_radius)

    def radius(self, f: FunctionSpec, A: float, ceiling: float = DEFAULT_CEILING,
               tol: Optional[float] = None) -> RadiusResult:
        return empirical_concavity_radius(
            f, A,
            tol=tol if tol is not None else self.settings.bisection_tol,
            ceiling=ceiling,
            samples=self.settings.circle_samples,
            evaluation_radius=self.settings.evaluation_radius,
        )
