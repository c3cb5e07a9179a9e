"""
Catalog of closed-form extremal functions and the generic function evaluator
"""

import cmath
from typing import Any, Callable, Dict, Optional

import numpy as np
import structlog

from ..models.functions import (
    CatalogFunction, CloseToStarExtremal, FunctionSpec, GeneralizedKoebe, MeromorphicKp,
    Monomial, PowerDistortion, RotatedFunction, RotatedKoebe, Schild, SeriesFunction,
    SubordinateProduct, as_complex,
)
from ..utils.errors import ConcavityError, NearPole
from .jet_core import DEFAULT_EVALUATION_RADIUS, DIVIDE_TOL, Jet2, eval_series
from .subordination import make_p

logger = structlog.get_logger()


# Jet-arithmetic path

def _koebe_jet(c: GeneralizedKoebe, Z: Jet2) -> Jet2:
    return Z / (1.0 - Z ** c.n) ** (2.0 / c.n)


def _rotated_koebe_jet(c: RotatedKoebe, Z: Jet2) -> Jet2:
    return Z / (1.0 + Z) ** 2


def _power_distortion_jet(c: PowerDistortion, Z: Jet2) -> Jet2:
    return Z / (1.0 - Z) ** float(c.beta - c.alpha)


def _monomial_jet(c: Monomial, Z: Jet2) -> Jet2:
    return (Z ** (c.n + 1)).scale(c.lam / (c.n * (c.n + 1)))


def _schild_jet(c: Schild, Z: Jet2) -> Jet2:
    return Z / (1.0 - Z.scale(2.0 * c.b) + Z * Z) ** float(1.0 - c.alpha)


def _close_to_star_jet(c: CloseToStarExtremal, Z: Jet2) -> Jet2:
    return Z * (Z + 1.0) / (1.0 - Z)


def _kp_jet(c: MeromorphicKp, Z: Jet2) -> Jet2:
    return Z.scale(-c.p) / ((Z - c.p) * (1.0 - Z.scale(c.p)))


_JET_BUILDERS: Dict[type, Callable[[Any, Jet2], Jet2]] = {
    GeneralizedKoebe: _koebe_jet,
    RotatedKoebe: _rotated_koebe_jet,
    PowerDistortion: _power_distortion_jet,
    Monomial: _monomial_jet,
    Schild: _schild_jet,
    CloseToStarExtremal: _close_to_star_jet,
    MeromorphicKp: _kp_jet,
}


def eval_catalog(c: CatalogFunction, z: Any) -> Jet2:
    """Jet of a catalog function, derived by jet arithmetic"""
    return _JET_BUILDERS[type(c)](c, Jet2.variable(z))


# Hand-derived closed forms

def _checked(denominator: Any) -> Any:
    if np.any(np.abs(denominator) <= DIVIDE_TOL):
        raise NearPole("closed form denominator vanishes")
    return denominator


def catalog_closed_form(c: CatalogFunction, z: Any) -> Jet2:
    """
    Jet of a catalog function from symbolic f', f''

    Independent of the jet-arithmetic path; used as a cross-check.
    """
    z = np.asarray(z, dtype=complex)

    if isinstance(c, GeneralizedKoebe):
        n = c.n
        u = _checked(1.0 - z ** n)
        f = z * u ** (-2.0 / n)
        df = (1.0 + z ** n) * u ** (-2.0 / n - 1.0)
        d2f = 2.0 * z ** (n - 1) * (n + 1.0 + z ** n) * u ** (-2.0 / n - 2.0)
    elif isinstance(c, RotatedKoebe):
        u = _checked(1.0 + z)
        f = z / u ** 2
        df = (1.0 - z) / u ** 3
        d2f = (2.0 * z - 4.0) / u ** 4
    elif isinstance(c, PowerDistortion):
        g = float(c.beta - c.alpha)
        u = _checked(1.0 - z)
        f = z * u ** (-g)
        df = u ** (-g - 1.0) * (1.0 + (g - 1.0) * z)
        d2f = g * u ** (-g - 2.0) * (2.0 + (g - 1.0) * z)
    elif isinstance(c, Monomial):
        n = c.n
        f = c.lam / (n * (n + 1.0)) * z ** (n + 1)
        df = c.lam / n * z ** n
        d2f = c.lam * z ** (n - 1)
    elif isinstance(c, Schild):
        mu = 1.0 - c.alpha
        q = _checked(1.0 - 2.0 * c.b * z + z * z)
        dq = 2.0 * z - 2.0 * c.b
        N = 1.0 - 2.0 * c.b * c.alpha * z + (2.0 * c.alpha - 1.0) * z * z
        dN = -2.0 * c.b * c.alpha + 2.0 * (2.0 * c.alpha - 1.0) * z
        f = z * q ** (-mu)
        df = q ** (-mu - 1.0) * N
        d2f = q ** (-mu - 2.0) * (q * dN - (mu + 1.0) * dq * N)
    elif isinstance(c, CloseToStarExtremal):
        u = _checked(1.0 - z)
        f = z * (z + 1.0) / u
        df = (1.0 + 2.0 * z - z * z) / u ** 2
        d2f = 4.0 / u ** 3
    elif isinstance(c, MeromorphicKp):
        p = c.p
        D = _checked(-p * z * z + (1.0 + p * p) * z - p)
        dD = -2.0 * p * z + (1.0 + p * p)
        f = -p * z / D
        df = p * p * (1.0 - z * z) / D ** 2
        d2f = -2.0 * p * p * (z * D + (1.0 - z * z) * dD) / D ** 3
    else:
        raise TypeError(f"no closed form for {type(c).__name__}")

    return Jet2(f, df, d2f)


def displayed_tf(c: CatalogFunction, A: float, z: Any) -> Optional[Any]:
    """
    The closed T_f expressions quoted alongside each sharpness claim

    Returned verbatim so they can be compared with the generic evaluator;
    None when no such expression exists for the variant.
    """
    z = np.asarray(z, dtype=complex)
    lead = (A + 1.0) / 2.0 * (1.0 - z) / (1.0 + z)
    scale = 2.0 / (A - 1.0)

    if isinstance(c, GeneralizedKoebe):
        n = c.n
        tail = ((2 * n + 2) * z ** n + (1.0 - n + 2.0 / n) * z ** (2 * n)) / (1.0 - z ** (2 * n))
        return scale * (lead - 1.0 - tail)
    if isinstance(c, PowerDistortion):
        d = c.alpha - c.beta
        return scale * (lead - 1.0 + 2.0 * d / (1.0 - z) ** (1.0 - d)
                        - (-1.0 + d) * d * z / (1.0 - z) ** (2.0 - d))
    if isinstance(c, Monomial):
        lam, n = c.lam, c.n
        return scale * (lead - (1.0 + (n + 1) * lam * z ** n) / (1.0 + lam * z ** n))
    if isinstance(c, CloseToStarExtremal):
        return scale * (lead - 1.0 - (7.0 * z - z * z) / (1.0 - z) ** 3)
    return None


# Generic evaluation of any FunctionSpec

def evaluate(f: FunctionSpec, z: Any,
             evaluation_radius: float = DEFAULT_EVALUATION_RADIUS) -> Jet2:
    """Jet of any supported function specification at z"""
    z = as_complex(z)
    if isinstance(f, SeriesFunction):
        return eval_series(f, z, evaluation_radius)
    if isinstance(f, CatalogFunction):
        return eval_catalog(f, z)
    if isinstance(f, RotatedFunction):
        rotor = cmath.exp(1j * f.angle)
        inner = evaluate(f.base, rotor * z, evaluation_radius)
        return Jet2(inner.f / rotor, inner.df, inner.d2f * rotor)
    if isinstance(f, SubordinateProduct):
        return Jet2.variable(z) * make_p(f.witness, f.n, z)
    raise ConcavityError(f"unsupported function specification {type(f).__name__}")
