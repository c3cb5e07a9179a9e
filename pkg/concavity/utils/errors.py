"""
Exception hierarchy for the concavity radius toolkit
"""

from typing import Any, Optional


class ConcavityError(Exception):
    """Base class for every error raised by the toolkit"""


class NearPole(ConcavityError):
    """Evaluation too close to a zero of a denominator"""


class BranchCut(ConcavityError):
    """Real power requested on (or within tolerance of) the principal cut"""


class OutsideValidityDisk(ConcavityError):
    """Series evaluated beyond the configured evaluation radius"""


class OutOfDomain(ConcavityError):
    """Radius argument outside the domain of a Phi function"""


class UnresolvedRadius(ConcavityError):
    """A radius search that ended without a bracket; carries the partial result"""

    def __init__(self, message: str, result: Any = None):
        super().__init__(message)
        self.result = result


class NoRoot(UnresolvedRadius):
    """No sign change found before the domain ceiling"""


class NoSignChange(UnresolvedRadius):
    """Circle minimum stays positive up to the scan ceiling"""


class NoConvergence(ConcavityError):
    """Extrapolation did not settle"""


class TruncationOverflow(ConcavityError):
    """Truncated series lost too much accuracy"""


class InvalidParameter(ConcavityError, ValueError):
    """A user supplied parameter is missing or out of range"""

    def __init__(self, parameter: str, message: Optional[str] = None):
        self.parameter = parameter
        super().__init__(f"invalid parameter '{parameter}': {message or 'out of range'}")
