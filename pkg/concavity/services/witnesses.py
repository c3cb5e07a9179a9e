"""
Random class members built by subordination, and the lemma checks run against them
"""

import math
from typing import Any, Iterator, List, Optional, Tuple

import numpy as np
import structlog

from ..models.functions import FunctionSpec, SeriesFunction, SubordinateProduct
from ..models.phi import SQRT2_MINUS_1, Phi1, Phi6
from ..models.report import WitnessSummary
from ..models.witness import SchwarzFunction, WitnessP
from ..utils.config import DEFAULTS, Settings
from ..utils.errors import InvalidParameter, NoSignChange, TruncationOverflow
from .catalog import evaluate
from .concavity import CLOSE_TO_STAR_CEILING, empirical_concavity_radius, min_re_Tf_on_circle
from .jet_core import eval_series
from .radius_solver import least_root, re_tf_lower_bound
from .subordination import eval_schwarz, make_p

logger = structlog.get_logger()

MAX_SERIES_ORDER = 128
FFT_RADIUS = 0.9
ROUND_TRIP_RADIUS = 0.5
ROUND_TRIP_TOL = 1e-8
LEMMA_RADII = (0.25, 0.5, 0.75, 0.9)
DISTORTION_RADII = (0.1, 0.2, 0.3, 0.4)
LEMMA_SAMPLES = 256


def _circle(r: float, samples: int) -> np.ndarray:
    if not 0.0 < r < 1.0:
        raise InvalidParameter('r', 'requires 0 < r < 1')
    return r * np.exp(2j * np.pi * np.arange(samples) / samples)


def lemma_a_bound(a_param: float, b_param: float, n: int, r: float) -> Tuple[float, float]:
    """Centre and radius of the disk containing p(|z| = r) for p in P_n[A, B]"""
    r2n = r ** (2 * n)
    denominator = 1.0 - b_param ** 2 * r2n
    return (1.0 - a_param * b_param * r2n) / denominator, (a_param - b_param) * r ** n / denominator


def lemmaA_order_alpha(alpha: float, n: int, r: float) -> Tuple[float, float]:
    """The P_n(alpha) disk: A = 1 - 2 alpha, B = -1"""
    if not 0.0 <= alpha < 1.0:
        raise InvalidParameter('alpha', 'requires 0 <= alpha < 1')
    r2n = r ** (2 * n)
    return (1.0 + (1.0 - 2.0 * alpha) * r2n) / (1.0 - r2n), 2.0 * (1.0 - alpha) * r ** n / (1.0 - r2n)


def lemmaA_violation(witness: WitnessP, n: int, r: float, samples: int = LEMMA_SAMPLES) -> float:
    """max over |z| = r of |p(z) - centre| - radius"""
    z = _circle(r, samples)
    centre, radius = lemma_a_bound(witness.a_param, witness.b_param, n, r)
    p = make_p(witness, n, z).f
    return float(np.max(np.abs(p - centre) - radius))


def lemmaB_violation(witness: WitnessP, n: int, r: float, samples: int = LEMMA_SAMPLES) -> float:
    """max over |z| = r of |z p'/p| - 2 n r^n / (1 - r^(2n)); needs A = 1, B = -1"""
    if witness.a_param != 1.0 or witness.b_param != -1.0:
        raise InvalidParameter('a_param', 'the log-derivative bound needs A = 1 and B = -1')
    z = _circle(r, samples)
    jet = make_p(witness, n, z)
    bound = 2.0 * n * r ** n / (1.0 - r ** (2 * n))
    return float(np.max(np.abs(z * jet.df / jet.f) - bound))


def schwarz_pick_violation(w: SchwarzFunction, z: Any) -> float:
    """|w'(z)| (1 - |z|^2) - (1 - |w(z)|^2), maximised over the given points"""
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1.0):
        raise InvalidParameter('z', 'requires |z| < 1')
    jet = eval_schwarz(w, z)
    return float(np.max(np.abs(jet.df) * (1.0 - np.abs(z) ** 2) - (1.0 - np.abs(jet.f) ** 2)))


def close_to_star_distortion_violation(f: FunctionSpec, r: float, samples: int = LEMMA_SAMPLES) -> float:
    """max over |z| = r of (1 - 2r - r^2)/(1 - r^2) - |z f'/f|"""
    if not 0.0 < r < SQRT2_MINUS_1:
        raise InvalidParameter('r', 'requires 0 < r < sqrt(2) - 1')
    z = _circle(r, samples)
    jet = evaluate(f, z)
    lower = (1.0 - 2.0 * r - r * r) / (1.0 - r * r)
    return float(np.max(lower - np.abs(z * jet.df / jet.f)))


def p_coefficients(witness: WitnessP, n: int, order: int, rho: float = FFT_RADIUS) -> np.ndarray:
    """
    Taylor coefficients c_0..c_{order-1} of p by FFT on |z| = rho

    Args:
        witness: the subordinating data
        n: vanishing order of the Schwarz function
        order: number of coefficients
        rho: sampling radius

    Returns:
        Complex array with c_0 = 1 up to rounding
    """
    samples = max(1024, 4 * order)
    z = rho * np.exp(2j * np.pi * np.arange(samples) / samples)
    spectrum = np.fft.fft(make_p(witness, n, z).f) / samples
    return spectrum[:order] / rho ** np.arange(order)


def starlike_from_p(p_series: Any, order: int = DEFAULTS.truncation_order) -> SeriesFunction:
    """
    Truncated f with z f'/f = p, i.e. f = z exp(sum c_k z^k / k)

    Args:
        p_series: coefficients of p - 1, starting with the constant term
        order: truncation order N of f, at most 128

    Returns:
        SeriesFunction with coefficients a_1..a_N

    Raises:
        TruncationOverflow: when z f'/f misses p by more than 1e-8 on |z| = 0.5
    """
    if not 2 <= order <= MAX_SERIES_ORDER:
        raise InvalidParameter('order', f"requires 2 <= N <= {MAX_SERIES_ORDER}")

    c = np.zeros(order, dtype=complex)
    given = np.asarray(p_series, dtype=complex)[:order]
    c[:given.size] = given
    if abs(c[0]) > 1e-10:
        raise InvalidParameter('p_series', 'constant term of p - 1 must vanish')
    c[0] = 0.0

    # E = exp(g), g' = sum c_k z^(k-1): m E_m = sum_{k=1..m} c_k E_{m-k}
    E = np.zeros(order, dtype=complex)
    E[0] = 1.0
    for m in range(1, order):
        E[m] = np.dot(c[1:m + 1], E[m - 1::-1]) / m

    f = SeriesFunction.from_array(E)

    z = _circle(ROUND_TRIP_RADIUS, 64)
    jet = eval_series(f, z, evaluation_radius=1.0)
    with np.errstate(all='ignore'):
        recovered = z * jet.df / jet.f
    expected = 1.0 + np.polynomial.polynomial.polyval(z, c)
    error = float(np.max(np.abs(recovered - expected)))
    if not math.isfinite(error) or error > ROUND_TRIP_TOL:
        logger.error("Series inversion lost accuracy", order=order, error=error)
        raise TruncationOverflow(f"z f'/f misses p by {error:.3e} on |z|={ROUND_TRIP_RADIUS}")

    return f


class WitnessGenerator:
    """Seeded random Schwarz functions and the class members they induce"""

    def __init__(self, settings: Optional[Settings] = None, seed: Optional[int] = None):
        self.settings = settings or DEFAULTS
        self.seed = self.settings.witness_seed if seed is None else seed
        self.rng = np.random.default_rng(self.seed)

    def schwarz(self, n: int) -> SchwarzFunction:
        count = int(self.rng.integers(0, self.settings.max_blaschke_zeros + 1))
        # uniform in the disk of radius blaschke_radius
        moduli = self.settings.blaschke_radius * np.sqrt(self.rng.uniform(0.0, 1.0, count))
        angles = self.rng.uniform(0.0, 2.0 * np.pi, count)
        zeros = tuple(complex(z) for z in moduli * np.exp(1j * angles))
        return SchwarzFunction(n, zeros, float(self.rng.uniform(0.0, 2.0 * np.pi)))

    def witness(self, n: int, a_param: float = 1.0, b_param: float = -1.0) -> WitnessP:
        return WitnessP(a_param, b_param, self.schwarz(n))

    def witnesses(self, n: int, count: int, a_param: float = 1.0, b_param: float = -1.0) -> Iterator[WitnessP]:
        for _ in range(count):
            yield self.witness(n, a_param, b_param)

    def disk_points(self, count: int, radius: float = 0.95) -> np.ndarray:
        moduli = radius * np.sqrt(self.rng.uniform(0.0, 1.0, count))
        return moduli * np.exp(1j * self.rng.uniform(0.0, 2.0 * np.pi, count))

    def starlike_member(self, witness: WitnessP, n: int) -> SeriesFunction:
        """Member of S0^(n) with z f'/f = p"""
        order = self.settings.truncation_order
        c = p_coefficients(witness, n, order)
        c[0] -= 1.0
        return starlike_from_p(c, order)

    @staticmethod
    def close_to_star_member(witness: WitnessP) -> SubordinateProduct:
        """f = z p with Re p > 0"""
        return SubordinateProduct(witness, 1)


def _empirical_margin(f: FunctionSpec, A: float, solver_radius: float, ceiling: float, settings: Settings) -> float:
    try:
        result = empirical_concavity_radius(f, A, tol=settings.bisection_tol, ceiling=ceiling,
                                            samples=settings.circle_samples,
                                            evaluation_radius=settings.evaluation_radius)
    except NoSignChange as error:
        result = error.result
    return result.value - solver_radius


def verify_class_bound(class_id: str, witnesses: List[WitnessP], A: float, n: int = 1,
                       generator: Optional[WitnessGenerator] = None,
                       lower_bound: bool = True) -> WitnessSummary:
    """
    Run the lemma suite and the lower-bound property over a batch of witnesses

    s0n: the disk and log-derivative bounds on p, Schwarz-Pick, the Re T_f lower bound and
    empirical radius >= least_root(Phi1). close_to_star: the distortion
    bound, Schwarz-Pick and empirical radius >= least_root(Phi6).
    """
    generator = generator or WitnessGenerator()
    settings = generator.settings
    summary = WitnessSummary(class_id, n, A, len(witnesses), generator.seed)

    if class_id == 's0n':
        phi = Phi1(n, A)
        ceiling = 0.999
    elif class_id == 'close_to_star':
        if n != 1:
            raise InvalidParameter('n', 'close_to_star witnesses use n = 1')
        phi = Phi6(A)
        ceiling = CLOSE_TO_STAR_CEILING
    else:
        raise InvalidParameter('class', f"no witness suite for '{class_id}'")

    solver_radius = least_root(phi, settings.bisection_tol, settings.scan_step).value
    points = generator.disk_points(16)

    for index, witness in enumerate(witnesses):
        summary.record('schwarz_pick', schwarz_pick_violation(witness.schwarz, points))

        if class_id == 's0n':
            for r in LEMMA_RADII:
                summary.record('lemma_a', lemmaA_violation(witness, n, r))
                summary.record('lemma_b', lemmaB_violation(witness, n, r))
            f = generator.starlike_member(witness, n)
            half_radius = 0.5 * solver_radius
            scan = min_re_Tf_on_circle(f, A, half_radius, settings.circle_samples, settings.evaluation_radius)
            summary.record('re_tf_lower_bound', re_tf_lower_bound(phi, half_radius) - scan.min_value)
        else:
            f = generator.close_to_star_member(witness)
            for r in DISTORTION_RADII:
                summary.record('distortion', close_to_star_distortion_violation(f, r))

        if lower_bound:
            summary.record_margin(_empirical_margin(f, A, solver_radius, ceiling, settings))

        logger.debug("Witness checked", class_id=class_id, index=index, violations=summary.violations)

    logger.info("Witness suite finished", **summary.to_dict())
    return summary
