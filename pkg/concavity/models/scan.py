"""
Circle scan results
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class CircleScan:
    """Minimum of Re T_f over the circle |z| = r"""

    r: float
    samples: int
    min_value: float
    argmin_angle: float
    refined: bool
    excluded: int = 0


@dataclass(frozen=True)
class PoleLimit:
    """Extrapolated limit of P_f at its pole"""

    value: complex
    error_estimate: float
