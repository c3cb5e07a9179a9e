"""
Schwarz functions and the Moebius image p = (1 + A w)/(1 + B w)
"""

from typing import Any

import structlog

from ..models.functions import as_complex
from ..models.witness import SchwarzFunction, WitnessP
from ..utils.errors import InvalidParameter
from .jet_core import Jet2

logger = structlog.get_logger()


def eval_schwarz(w: SchwarzFunction, z: Any) -> Jet2:
    """Jet of the finite Blaschke product w at z"""
    Z = Jet2.variable(as_complex(z))
    jet = (Z ** w.zero_order).scale(w.unimodular)
    for a in w.blaschke_zeros:
        jet = jet * ((Z - a) / (1.0 - Z.scale(a.conjugate())))
    return jet


def make_p(witness: WitnessP, n: int, z: Any) -> Jet2:
    """
    Jet of p = (1 + A w) / (1 + B w)

    Args:
        witness: A, B and the Schwarz function
        n: required vanishing order of w at the origin
        z: evaluation point(s)

    Returns:
        Jet of p, with p(0) = 1
    """
    if witness.schwarz.zero_order < n:
        raise InvalidParameter('zero_order', f"Schwarz function must vanish to order {n}")

    omega = eval_schwarz(witness.schwarz, z)
    return (1.0 + omega.scale(witness.a_param)) / (1.0 + omega.scale(witness.b_param))
