"""
Function specifications: truncated series, closed-form catalog entries and rotations
"""

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, ClassVar, Dict, Sequence, Tuple, Union

from ..utils.errors import InvalidParameter

if TYPE_CHECKING:
    from .witness import WitnessP


@dataclass(frozen=True)
class ComplexPoint:
    """A finite point of the complex plane"""

    re: float
    im: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise InvalidParameter('z', 'components must be finite')

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


def as_complex(z: Any) -> Any:
    """Unwrap a ComplexPoint; scalars and arrays pass through"""
    return z.value if isinstance(z, ComplexPoint) else z


@dataclass(frozen=True)
class SeriesFunction:
    """Truncated power series f(z) = z + a2 z^2 + ... + aN z^N"""

    coefficients: Tuple[complex, ...]

    def __post_init__(self):
        coefficients = tuple(complex(c) for c in self.coefficients)
        object.__setattr__(self, 'coefficients', coefficients)
        if len(coefficients) < 2:
            raise InvalidParameter('coefficients', 'truncation order must be at least 2')
        if coefficients[0] != 1:
            raise InvalidParameter('coefficients', 'a1 must equal 1')
        if not all(math.isfinite(c.real) and math.isfinite(c.imag) for c in coefficients):
            raise InvalidParameter('coefficients', 'coefficients must be finite')

    @classmethod
    def identity(cls) -> 'SeriesFunction':
        return cls((1, 0))

    @classmethod
    def from_array(cls, values: Sequence[complex]) -> 'SeriesFunction':
        return cls(tuple(complex(v) for v in values))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @property
    def tail_indicator(self) -> float:
        """Magnitude of the last retained coefficient"""
        return abs(self.coefficients[-1])

    @property
    def function_id(self) -> str:
        return f"series(N={self.order})"

    normalized: ClassVar[bool] = True


class CatalogFunction:
    """Base class for closed-form extremal functions"""

    name: ClassVar[str] = 'catalog'
    normalized: ClassVar[bool] = True

    def params(self) -> Dict[str, float]:
        return {}

    @property
    def function_id(self) -> str:
        params = ','.join(f"{k}={v:g}" for k, v in self.params().items())
        return f"{self.name}({params})" if params else self.name


@dataclass(frozen=True)
class GeneralizedKoebe(CatalogFunction):
    """z / (1 - z^n)^(2/n)"""

    n: int = 1
    name: ClassVar[str] = 'generalized_koebe'

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise InvalidParameter('n', 'must be a positive integer')

    def params(self):
        return {'n': self.n}


@dataclass(frozen=True)
class RotatedKoebe(CatalogFunction):
    """z / (1 + z)^2"""

    name: ClassVar[str] = 'rotated_koebe'


@dataclass(frozen=True)
class PowerDistortion(CatalogFunction):
    """z / (1 - z)^(beta - alpha)"""

    alpha: float = 0.0
    beta: float = 2.0
    name: ClassVar[str] = 'power_distortion'

    def __post_init__(self):
        if not 0.0 <= self.alpha <= self.beta:
            raise InvalidParameter('beta', 'requires 0 <= alpha <= beta')

    def params(self):
        return {'alpha': self.alpha, 'beta': self.beta}


@dataclass(frozen=True)
class Monomial(CatalogFunction):
    """lambda / (n (n + 1)) z^(n+1); f'(0) = 0, so it sits outside the normalized class"""

    lam: float = 1.0
    n: int = 1
    name: ClassVar[str] = 'monomial'
    normalized: ClassVar[bool] = False

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise InvalidParameter('n', 'must be a positive integer')
        if not 0.0 < self.lam < self.n * (self.n + 1):
            raise InvalidParameter('lam', 'requires 0 < lambda < n(n+1)')

    def params(self):
        return {'lam': self.lam, 'n': self.n}


@dataclass(frozen=True)
class Schild(CatalogFunction):
    """z / (1 - 2 b z + z^2)^(1 - alpha)"""

    alpha: float = 0.0
    b: float = -1.0
    name: ClassVar[str] = 'schild'

    def __post_init__(self):
        if not 0.0 <= self.alpha < 1.0:
            raise InvalidParameter('alpha', 'requires 0 <= alpha < 1')
        if not -1.0 <= self.b < 1.0:
            raise InvalidParameter('b', 'requires -1 <= b < 1')

    def params(self):
        return {'alpha': self.alpha, 'b': self.b}


@dataclass(frozen=True)
class CloseToStarExtremal(CatalogFunction):
    """z (z + 1) / (1 - z)"""

    name: ClassVar[str] = 'close_to_star_extremal'


@dataclass(frozen=True)
class MeromorphicKp(CatalogFunction):
    """k_p(z) = -p z / ((z - p)(1 - p z)), simple pole at p"""

    p: float = 0.5
    name: ClassVar[str] = 'meromorphic_kp'

    def __post_init__(self):
        if not 0.0 < self.p < 1.0:
            raise InvalidParameter('p', 'requires 0 < p < 1')

    def params(self):
        return {'p': self.p}


@dataclass(frozen=True)
class RotatedFunction:
    """e^(-i theta) f(e^(i theta) z); stays in the normalized class when f does"""

    base: 'FunctionSpec'
    angle: float = math.pi

    @property
    def normalized(self) -> bool:
        return self.base.normalized

    @property
    def function_id(self) -> str:
        return f"{self.base.function_id}@rot={self.angle:.17g}"


@dataclass(frozen=True)
class SubordinateProduct:
    """f(z) = z p(z) with p = (1 + A w)/(1 + B w); Re(f/z) > 0 when A = 1, B = -1"""

    witness: 'WitnessP'
    n: int = 1
    normalized: ClassVar[bool] = True

    @property
    def function_id(self) -> str:
        return f"z*p(n={self.n})"


FunctionSpec = Union[SeriesFunction, CatalogFunction, RotatedFunction, SubordinateProduct]

CATALOG_BY_NAME = {
    cls.name: cls
    for cls in (GeneralizedKoebe, RotatedKoebe, PowerDistortion, Monomial,
                Schild, CloseToStarExtremal, MeromorphicKp)
}
