"""
Radius-defining functions and solver results
"""

import math
from dataclasses import dataclass
from typing import ClassVar, Dict

from ..utils.errors import InvalidParameter

SQRT2_MINUS_1 = math.sqrt(2.0) - 1.0


def check_concavity_param(A: float) -> float:
    """Co(A) requires 1 < A <= 2"""
    if not (isinstance(A, (int, float)) and 1.0 < A <= 2.0):
        raise InvalidParameter('A', 'requires 1 < A <= 2')
    return float(A)


class PhiSpec:
    """Base class for the five radius-defining real functions"""

    name: ClassVar[str] = 'phi'
    # right end of the domain and whether it is attained
    domain_upper: ClassVar[float] = 1.0
    domain_closed: ClassVar[bool] = False

    def params(self) -> Dict[str, float]:
        return {}

    @property
    def ceiling(self) -> float:
        return self.domain_upper - 1e-12

    @property
    def label(self) -> str:
        return f"{self.name}({','.join(f'{k}={v:g}' for k, v in self.params().items())})"


@dataclass(frozen=True)
class Phi1(PhiSpec):
    n: int = 1
    A: float = 2.0
    name: ClassVar[str] = 'phi1'

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise InvalidParameter('n', 'must be a positive integer')
        check_concavity_param(self.A)

    def params(self):
        return {'n': self.n, 'A': self.A}


@dataclass(frozen=True)
class Phi2(PhiSpec):
    alpha: float = 0.0
    beta: float = 2.0
    A: float = 2.0
    name: ClassVar[str] = 'phi2'
    domain_closed: ClassVar[bool] = True

    def __post_init__(self):
        if self.alpha < 0.0:
            raise InvalidParameter('alpha', 'requires alpha >= 0')
        if self.beta < self.alpha:
            raise InvalidParameter('beta', 'requires alpha <= beta')
        check_concavity_param(self.A)

    def params(self):
        return {'alpha': self.alpha, 'beta': self.beta, 'A': self.A}


@dataclass(frozen=True)
class Phi3(PhiSpec):
    beta: float = 1.0
    A: float = 2.0
    name: ClassVar[str] = 'phi3'

    def __post_init__(self):
        if not 0.0 < self.beta <= 1.0:
            raise InvalidParameter('beta', 'requires 0 < beta <= 1')
        check_concavity_param(self.A)

    def params(self):
        return {'beta': self.beta, 'A': self.A}


@dataclass(frozen=True)
class Phi4(PhiSpec):
    alpha: float = 0.75
    A: float = 2.0
    name: ClassVar[str] = 'phi4'
    domain_closed: ClassVar[bool] = True

    def __post_init__(self):
        if not 0.0 <= self.alpha < 1.0:
            raise InvalidParameter('alpha', 'requires 0 <= alpha < 1')
        check_concavity_param(self.A)

    def params(self):
        return {'alpha': self.alpha, 'A': self.A}


@dataclass(frozen=True)
class Phi6(PhiSpec):
    A: float = 2.0
    name: ClassVar[str] = 'phi6'
    domain_upper: ClassVar[float] = SQRT2_MINUS_1
    domain_closed: ClassVar[bool] = True

    def __post_init__(self):
        check_concavity_param(self.A)

    def params(self):
        return {'A': self.A}


@dataclass(frozen=True)
class RadiusResult:
    """Least-root output with its bracket"""

    value: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    iterations: int
    converged: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            'value': self.value,
            'bracket_lo': self.bracket_lo,
            'bracket_hi': self.bracket_hi,
            'residual': self.residual,
            'iterations': self.iterations,
            'converged': self.converged,
        }
