"""
Validation utilities for radius queries and sweep grids
"""

import math
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import structlog

from ..models.report import CLASS_IDS, RadiusQuery
from .errors import InvalidParameter

logger = structlog.get_logger()

MIN_TOL = 1e-14
MAX_GRID_RESOLUTION = 4096


class ValidationUtils:
    """Validation utilities for command-line input"""

    def __init__(self):
        # Parameters each class needs before a Phi can be built
        self.required_parameters = {
            's0n': ['n'],
            'kab': ['alpha', 'beta'],
            'strongly_starlike': ['beta'],
            'starlike_order': ['alpha'],
            'close_to_star': [],
        }

        # Parameters that only shape the extremal
        self.optional_parameters = {
            'strongly_starlike': ['lam', 'n'],
            'starlike_order': ['b'],
        }

        self.integer_parameters = {'n', 'count', 'seed', 'resolution'}

    def validate_class(self, class_id: Optional[str]) -> str:
        if class_id not in CLASS_IDS:
            logger.warning("Unknown class", class_id=class_id)
            raise InvalidParameter('class', f"must be one of {', '.join(CLASS_IDS)}")
        return class_id

    def validate_parameters(self, class_id: str, parameters: Dict[str, Any]) -> Dict[str, float]:
        """Keep the parameters the class uses, coerced and checked for presence"""
        self.validate_class(class_id)
        allowed = self.allowed_parameters(class_id)

        missing = [name for name in self.required_parameters[class_id] if parameters.get(name) is None]
        if missing:
            logger.warning("Missing required parameters", class_id=class_id, missing=missing)
            raise InvalidParameter(missing[0], f"required for class {class_id}")

        cleaned: Dict[str, float] = {}
        for name in allowed:
            value = parameters.get(name)
            if value is None:
                continue
            cleaned[name] = self.validate_number(name, value)
        return cleaned

    def allowed_parameters(self, class_id: str) -> List[str]:
        return self.required_parameters[class_id] + self.optional_parameters.get(class_id, [])

    def validate_query(self, class_id: Optional[str], parameters: Dict[str, Any],
                       A: Any, tol: Any = 1e-9) -> RadiusQuery:
        class_id = self.validate_class(class_id)
        cleaned = self.validate_parameters(class_id, parameters)
        return RadiusQuery(class_id, cleaned, self.validate_concavity_param(A), self.validate_tol(tol))

    def validate_concavity_param(self, A: Any) -> float:
        A = self.validate_number('A', A)
        if not 1.0 < A <= 2.0:
            raise InvalidParameter('A', 'requires 1 < A <= 2')
        return A

    def validate_tol(self, tol: Any) -> float:
        tol = self.validate_number('tol', tol)
        if tol < MIN_TOL:
            raise InvalidParameter('tol', f"requires tol >= {MIN_TOL}")
        return tol

    def parse_grid(self, name: str, spec: Optional[str]) -> List[float]:
        """
        Parse a grid flag

        Accepts a comma list ("1,2,3") or an inclusive linspace ("start:stop:count").
        """
        if spec is None or not str(spec).strip():
            raise InvalidParameter(name, 'grid must not be empty')
        spec = str(spec).strip()

        if ':' in spec:
            parts = spec.split(':')
            if len(parts) != 3:
                raise InvalidParameter(name, "range grid must read start:stop:count")
            start, stop = (self.validate_number(name, p) for p in parts[:2])
            count = int(self.validate_number(name, parts[2]))
            if count < 1:
                raise InvalidParameter(name, 'count must be positive')
            values = [float(v) for v in np.linspace(start, stop, count)]
        else:
            values = [self.validate_number(name, item) for item in spec.split(',') if item.strip()]

        if not values:
            raise InvalidParameter(name, 'grid must not be empty')
        return sorted(set(values))

    def validate_grid_request(self, r_max: Any, resolution: Any) -> None:
        r_max = self.validate_number('r_max', r_max)
        if not 0.0 < r_max < 1.0:
            raise InvalidParameter('r_max', 'requires 0 < r_max < 1')
        resolution = self.validate_number('resolution', resolution)
        if int(resolution) != resolution or not 1 <= resolution <= MAX_GRID_RESOLUTION:
            raise InvalidParameter('resolution', f"requires an integer in [1, {MAX_GRID_RESOLUTION}]")

    def validate_number(self, name: str, value: Any) -> float:
        """Validate a finite real (or integer for integer-valued parameters)"""
        try:
            number = float(value)
        except (TypeError, ValueError):
            raise InvalidParameter(name, f"not a number: {value!r}")
        if not math.isfinite(number):
            raise InvalidParameter(name, 'must be finite')
        if name in self.integer_parameters:
            if number != int(number):
                raise InvalidParameter(name, 'must be an integer')
            return int(number)
        return number


def expand_grid(axes: Dict[str, Sequence[float]]) -> List[Dict[str, float]]:
    """Cartesian product in lexicographic order of the sorted axis names"""
    names = sorted(axes)
    points: List[Dict[str, float]] = [{}]
    for name in names:
        points = [dict(point, **{name: value}) for point in points for value in axes[name]]
    return points
