"""
Second-order complex jets: (f, f', f'') propagated through arithmetic
"""

from dataclasses import dataclass
from numbers import Number
from typing import Any, Union

import numpy as np
import structlog

from ..models.functions import SeriesFunction, as_complex
from ..utils.errors import BranchCut, NearPole, OutsideValidityDisk

logger = structlog.get_logger()

DIVIDE_TOL = 1e-14
BRANCH_TOL = 1e-12
DEFAULT_EVALUATION_RADIUS = 0.95
SERIES_WARN_RADIUS = 0.9

Scalar = Union[complex, float, int, np.ndarray]


def _is_scalar(value: Any) -> bool:
    return isinstance(value, Number) or (isinstance(value, np.ndarray) and value.ndim == 0)


@dataclass(frozen=True)
class Jet2:
    """Value, first and second complex derivative at a point (or array of points)"""

    f: Any
    df: Any
    d2f: Any

    @classmethod
    def constant(cls, value: Scalar) -> 'Jet2':
        return cls(value, 0.0 * value, 0.0 * value)

    @classmethod
    def variable(cls, z: Scalar) -> 'Jet2':
        """The jet of the identity map at z"""
        return cls(z, 1.0 + 0.0 * z, 0.0 * z)

    def scale(self, c: Scalar) -> 'Jet2':
        return Jet2(c * self.f, c * self.df, c * self.d2f)

    def __add__(self, other: Any) -> 'Jet2':
        if isinstance(other, Jet2):
            return Jet2(self.f + other.f, self.df + other.df, self.d2f + other.d2f)
        return Jet2(self.f + other, self.df, self.d2f)

    __radd__ = __add__

    def __neg__(self) -> 'Jet2':
        return Jet2(-self.f, -self.df, -self.d2f)

    def __sub__(self, other: Any) -> 'Jet2':
        return self + (-other)

    def __rsub__(self, other: Any) -> 'Jet2':
        return (-self) + other

    def __mul__(self, other: Any) -> 'Jet2':
        if isinstance(other, Jet2):
            return jet_multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> 'Jet2':
        if isinstance(other, Jet2):
            return jet_divide(self, other)
        return jet_divide(self, Jet2.constant(other + 0.0 * self.f))

    def __rtruediv__(self, other: Any) -> 'Jet2':
        return jet_divide(Jet2.constant(other + 0.0 * self.f), self)

    def __pow__(self, exponent: Union[int, float]) -> 'Jet2':
        if isinstance(exponent, (int, np.integer)):
            return jet_power_int(self, int(exponent))
        return jet_power_real(self, float(exponent))


def jet_multiply(a: Jet2, b: Jet2) -> Jet2:
    """Leibniz rule to order two"""
    return Jet2(
        a.f * b.f,
        a.df * b.f + a.f * b.df,
        a.d2f * b.f + 2.0 * a.df * b.df + a.f * b.d2f,
    )


def jet_divide(a: Jet2, b: Jet2) -> Jet2:
    """Quotient rule to order two; raises NearPole when b.f is numerically zero"""
    tolerance = DIVIDE_TOL * (1.0 + np.abs(a.f))
    if np.any(np.abs(b.f) <= tolerance):
        raise NearPole("denominator vanishes at the evaluation point")

    q = a.f / b.f
    dq = (a.df - q * b.df) / b.f
    d2q = (a.d2f - 2.0 * dq * b.df - q * b.d2f) / b.f
    return Jet2(q, dq, d2q)


def jet_power_int(a: Jet2, k: int) -> Jet2:
    """Integer power; no branch cut involved"""
    if k < 0:
        return jet_divide(Jet2.constant(1.0 + 0.0 * a.f), jet_power_int(a, -k))
    if k == 0:
        return Jet2.constant(1.0 + 0.0 * a.f)

    p0 = a.f ** k
    p1 = k * a.f ** (k - 1)
    p2 = k * (k - 1) * a.f ** (k - 2) if k >= 2 else 0.0 * a.f
    return Jet2(p0, p1 * a.df, p2 * a.df * a.df + p1 * a.d2f)


def jet_power_real(a: Jet2, exponent: float) -> Jet2:
    """
    Principal real power u**e with the chain rule to order two

    Args:
        a: jet of the base u
        exponent: real exponent

    Returns:
        Jet of u**e on the principal branch

    Raises:
        BranchCut: when u lies within BRANCH_TOL of (-inf, 0]
    """
    u = np.asarray(a.f, dtype=complex)
    distance = np.where(u.real <= 0.0, np.abs(u.imag), np.abs(u))
    if np.any(distance <= BRANCH_TOL):
        raise BranchCut(f"base of real power {exponent} lies on the principal cut")

    g = np.power(u, exponent)
    g1 = exponent * g / u
    g2 = exponent * (exponent - 1.0) * g / (u * u)
    result = Jet2(g, g1 * a.df, g2 * a.df * a.df + g1 * a.d2f)
    if _is_scalar(a.f):
        return Jet2(complex(result.f), complex(result.df), complex(result.d2f))
    return result


def eval_series(s: SeriesFunction, z: Scalar,
                evaluation_radius: float = DEFAULT_EVALUATION_RADIUS) -> Jet2:
    """
    Horner evaluation of a truncated series with simultaneous derivatives

    Args:
        s: normalized truncated series z + a2 z^2 + ... + aN z^N
        z: evaluation point(s)
        evaluation_radius: largest admissible |z|

    Returns:
        Jet of the truncated function at z
    """
    z = as_complex(z)
    if np.any(np.abs(z) > evaluation_radius):
        raise OutsideValidityDisk(f"|z| exceeds evaluation radius {evaluation_radius}")
    reach = float(np.max(np.abs(z))) if np.size(z) else 0.0
    if reach > SERIES_WARN_RADIUS:
        logger.warning("Series evaluated near its validity radius", max_abs_z=reach, order=s.order, tail=s.tail_indicator)

    coefficients = (0j,) + s.coefficients
    p = coefficients[-1] + 0.0 * z
    dp = 0.0 * z
    d2p = 0.0 * z
    for c in reversed(coefficients[:-1]):
        d2p = d2p * z + 2.0 * dp
        dp = dp * z + p
        p = p * z + c
    return Jet2(p, dp, d2p)
