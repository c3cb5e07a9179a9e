"""
Schwarz functions and subordination witnesses
"""

import cmath
import math
from dataclasses import dataclass
from typing import Tuple

from ..utils.errors import InvalidParameter


@dataclass(frozen=True)
class SchwarzFunction:
    """w(z) = e^(i theta) z^m prod (z - a_i) / (1 - conj(a_i) z)"""

    zero_order: int = 1
    blaschke_zeros: Tuple[complex, ...] = ()
    rotation: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'blaschke_zeros', tuple(complex(a) for a in self.blaschke_zeros))
        if int(self.zero_order) != self.zero_order or self.zero_order < 1:
            raise InvalidParameter('zero_order', 'must be a positive integer')
        if any(abs(a) >= 1.0 for a in self.blaschke_zeros):
            raise InvalidParameter('blaschke_zeros', 'zeros must lie in the open unit disk')
        if not math.isfinite(self.rotation):
            raise InvalidParameter('rotation', 'must be finite')

    @property
    def unimodular(self) -> complex:
        return cmath.exp(1j * self.rotation)


@dataclass(frozen=True)
class WitnessP:
    """p = (1 + A w) / (1 + B w), a member of P_n[A, B] when w vanishes to order n"""

    a_param: float = 1.0
    b_param: float = -1.0
    schwarz: SchwarzFunction = SchwarzFunction()

    def __post_init__(self):
        if not -1.0 <= self.b_param < self.a_param <= 1.0:
            raise InvalidParameter('a_param', 'requires -1 <= B < A <= 1')

    @classmethod
    def of_order(cls, alpha: float, schwarz: SchwarzFunction) -> 'WitnessP':
        """The P_n(alpha) specialization A = 1 - 2 alpha, B = -1"""
        return cls(1.0 - 2.0 * alpha, -1.0, schwarz)
