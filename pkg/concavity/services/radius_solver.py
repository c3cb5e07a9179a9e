"""
Radius-defining functions, least-root solver and closed-form radii
"""

import math
from typing import Callable, Dict, Optional

import numpy as np
import structlog

from ..models.phi import SQRT2_MINUS_1, Phi1, Phi2, Phi3, Phi4, Phi6, PhiSpec, RadiusResult
from ..utils.config import DEFAULTS
from ..utils.errors import InvalidParameter, NoRoot, OutOfDomain

logger = structlog.get_logger()

MIN_TOL = 1e-14
REFINEMENT_FACTOR = 100


def _phi1(s: Phi1, r):
    n, A = s.n, s.A
    return (A + 1.0) / 2.0 * (1.0 - r) / (1.0 + r) - (1.0 + 2.0 * (n + 1) * r ** n + r ** (2 * n)) / (1.0 - r ** (2 * n))


def _phi2(s: Phi2, r):
    a, b, A = s.alpha, s.beta, s.A
    return (A + 3.0 + 2.0 * a - 2.0 * b) * r ** 2 - 2.0 * (A + 1.0 + a + b) * r + A - 1.0


def _phi3(s: Phi3, r):
    b, A = s.beta, s.A
    return (A + 1.0) * (1.0 - r) / (1.0 + r) - 4.0 * r * b / (1.0 - r ** 2) - 2.0 * ((1.0 + r) / (1.0 - r)) ** b


def _phi4(s: Phi4, r):
    a, A = s.alpha, s.A
    return ((-8.0 * a ** 2 + 6.0 * a - 2.0 * A * a + A - 1.0) * r ** 2
            + (2.0 * A * a - 2.0 * A - 10.0 * a + 6.0) * r + A - 1.0)


def _phi6(s: Phi6, r):
    A = s.A
    return -1.0 + A - (4.0 * A + 8.0) * r + (A + 21.0) * r ** 2 - 20.0 * r ** 3 - (A + 11.0) * r ** 4


_PHI_FORMULAS: Dict[type, Callable] = {
    Phi1: _phi1,
    Phi2: _phi2,
    Phi3: _phi3,
    Phi4: _phi4,
    Phi6: _phi6,
}


def _in_domain(spec: PhiSpec, r) -> bool:
    r = np.asarray(r, dtype=float)
    upper_ok = r <= spec.domain_upper if spec.domain_closed else r < spec.domain_upper
    return bool(np.all((r >= 0.0) & upper_ok))


def eval_phi(spec: PhiSpec, r):
    """
    Evaluate a radius-defining function

    Args:
        spec: Phi variant with its parameters
        r: radius (scalar or array) in the variant's domain

    Returns:
        Real value(s) of Phi
    """
    if not _in_domain(spec, r):
        raise OutOfDomain(f"r outside the domain of {spec.label}")
    return _PHI_FORMULAS[type(spec)](spec, r)


def re_tf_lower_bound(spec: PhiSpec, r):
    """Lower bound on Re T_f over |z| = r that holds for the whole class"""
    value = eval_phi(spec, r)
    A = spec.A
    if isinstance(spec, Phi1):
        return 2.0 * value / (A - 1.0)
    if isinstance(spec, Phi2):
        return value / ((A - 1.0) * (1.0 - r ** 2))
    if isinstance(spec, Phi3):
        return value / (A - 1.0)
    if isinstance(spec, Phi4):
        return value / ((A - 1.0) * (1.0 + (2.0 * spec.alpha - 1.0) * r))
    return value / ((A - 1.0) * (1.0 - r ** 2) * (1.0 - 2.0 * r - r ** 2))


def _first_sign_change(func: Callable, ceiling: float, step: float):
    grid = np.append(np.arange(0.0, ceiling, step), ceiling)
    with np.errstate(all='ignore'):
        values = func(grid)
    non_positive = np.flatnonzero(~(values > 0.0))
    if non_positive.size == 0:
        return None
    index = int(non_positive[0])
    if index == 0:
        return 0.0, 0.0
    return float(grid[index - 1]), float(grid[index])


def bracket_least_root(func: Callable, ceiling: float, tol: float, step: float = DEFAULTS.scan_step,
                       label: str = 'phi') -> RadiusResult:
    """
    Least root of func on [0, ceiling]

    Forward scan with the given step (then step/100) to the first sign
    change, followed by bisection to a bracket of width <= tol.

    Raises:
        NoRoot: no sign change before the ceiling; carries the non-converged result
    """
    if tol < MIN_TOL:
        raise InvalidParameter('tol', f"requires tol >= {MIN_TOL}")

    bracket = _first_sign_change(func, ceiling, step)
    if bracket is None:
        bracket = _first_sign_change(func, ceiling, step / REFINEMENT_FACTOR)
    if bracket is None:
        residual = abs(float(func(ceiling)))
        logger.warning("No sign change before ceiling", phi=label, ceiling=ceiling)
        raise NoRoot(f"{label} has no sign change on [0, {ceiling}]",
                     RadiusResult(ceiling, ceiling, ceiling, residual, 0, False))

    lo, hi = bracket
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        iterations += 1
        value = float(func(mid))
        if value > 0.0:
            lo = mid
        elif value < 0.0:
            hi = mid
        else:
            lo = hi = mid

    root = 0.5 * (lo + hi)
    result = RadiusResult(root, lo, hi, abs(float(func(root))), iterations, hi - lo <= tol)
    logger.info("Least root found", phi=label, value=root, iterations=iterations)
    return result


def least_root(spec: PhiSpec, tol: float = DEFAULTS.bisection_tol, step: float = DEFAULTS.scan_step) -> RadiusResult:
    """Least root of Phi in its domain; the radius of concavity of the class"""
    return bracket_least_root(lambda r: _PHI_FORMULAS[type(spec)](spec, r), spec.ceiling, tol, step, spec.label)


def _least_quadratic_root(a: float, b: float, c: float, upper: float = 1.0) -> Optional[float]:
    """Least root of a r^2 + b r + c in (0, upper)"""
    if abs(a) < 1e-15:
        if abs(b) < 1e-15:
            return None
        roots = [-c / b]
    else:
        disc = b * b - 4.0 * a * c
        if disc < 0.0:
            return None
        q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
        roots = [q / a]
        if q != 0.0:
            roots.append(c / q)
    admissible = sorted(root for root in roots if 0.0 < root < upper)
    return admissible[0] if admissible else None


def closed_form_root(spec: PhiSpec) -> Optional[float]:
    """
    Exact least root where Phi reduces to a quadratic

    Phi2 and Phi4 always; Phi1 for n = 1 and Phi3 for beta = 1, both of
    which clear to (A-1) r^2 - 2(A+5) r + (A-1). None otherwise.
    """
    A = spec.A
    if isinstance(spec, Phi2):
        a, b = spec.alpha, spec.beta
        return _least_quadratic_root(A + 3.0 + 2.0 * a - 2.0 * b, -2.0 * (A + 1.0 + a + b), A - 1.0)
    if isinstance(spec, Phi4):
        a = spec.alpha
        return _least_quadratic_root(-8.0 * a ** 2 + 6.0 * a - 2.0 * A * a + A - 1.0,
                                     2.0 * A * a - 2.0 * A - 10.0 * a + 6.0, A - 1.0)
    if (isinstance(spec, Phi1) and spec.n == 1) or (isinstance(spec, Phi3) and spec.beta == 1.0):
        return _least_quadratic_root(A - 1.0, -2.0 * (A + 5.0), A - 1.0)
    return None


def radius_of_convexity(n: int, beta: float) -> float:
    """Radius of convexity of order beta in S0^(n); beta = 1/2 gives the uniform convexity radius"""
    if int(n) != n or n < 1:
        raise InvalidParameter('n', 'must be a positive integer')
    if not 0.0 <= beta < 1.0:
        raise InvalidParameter('beta', 'requires 0 <= beta < 1')
    return (((1.0 + n) - math.sqrt(n * n + 2.0 * n + beta * beta)) / (1.0 + beta)) ** (1.0 / n)


def close_to_star_convexity_radius(tol: float = 1e-12) -> RadiusResult:
    """Convexity radius of the Re(f/z) > 0 class: least root of 1 - 5r - 3r^2 - r^3"""
    return bracket_least_root(lambda r: 1.0 - 5.0 * r - 3.0 * r ** 2 - r ** 3, 1.0, tol,
                              label='close_to_star_convexity')


def reference_constants() -> Dict[str, float]:
    """Classical radii quoted for comparison only"""
    return {
        'close_to_star_starlikeness': 2.0 - math.sqrt(3.0),
        'close_to_star_convexity': 5.0 - 2.0 * math.sqrt(6.0),
        're_f_over_z_starlikeness': SQRT2_MINUS_1,
        're_f_over_z_convexity': close_to_star_convexity_radius().value,
    }
