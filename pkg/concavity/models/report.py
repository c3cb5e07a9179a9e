"""
CLI query and report records
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

CLASS_IDS = ('s0n', 'kab', 'strongly_starlike', 'starlike_order', 'close_to_star')


@dataclass(frozen=True)
class RadiusQuery:
    """A validated radius request for one class"""

    class_id: str
    parameters: Dict[str, float]
    A: float
    tol: float = 1e-9

    def to_dict(self) -> Dict[str, Any]:
        return {
            'class': self.class_id,
            'parameters': dict(sorted(self.parameters.items())),
            'A': self.A,
            'tol': self.tol,
        }


@dataclass
class ReportRecord:
    """One JSON record produced by radius and verify"""

    query: Dict[str, Any]
    solver_radius: float
    extremal_id: str = ''
    closed_form: Optional[float] = None
    empirical_radius: Optional[float] = None
    argmin_angle: Optional[float] = None
    flags: List[str] = field(default_factory=list)
    solver: Dict[str, Any] = field(default_factory=dict)
    empirical: Optional[Dict[str, Any]] = None

    def add_flag(self, flag: str) -> None:
        if flag not in self.flags:
            self.flags.append(flag)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'query': self.query,
            'solver_radius': self.solver_radius,
            'closed_form': self.closed_form,
            'empirical_radius': self.empirical_radius,
            'extremal_id': self.extremal_id,
            'argmin_angle': self.argmin_angle,
            'flags': list(self.flags),
            'solver': self.solver,
            'empirical': self.empirical,
        }


@dataclass
class WitnessSummary:
    """Outcome of a seeded witness property suite"""

    class_id: str
    n: int
    A: float
    count: int
    seed: int
    tolerance: float = 1e-9
    margin_tolerance: float = 1e-6
    violations: int = 0
    max_violation: Optional[float] = None
    min_margin: Optional[float] = None
    checks: Dict[str, float] = field(default_factory=dict)

    def record(self, check: str, value: float) -> None:
        """Track the worst (largest) value of a check that must stay <= 0"""
        value = float(value)
        if value > self.tolerance:
            self.violations += 1
        self.checks[check] = max(self.checks.get(check, value), value)
        self.max_violation = value if self.max_violation is None else max(self.max_violation, value)

    def record_margin(self, margin: float) -> None:
        """Empirical radius minus solver radius for one member"""
        margin = float(margin)
        if margin < -self.margin_tolerance:
            self.violations += 1
        self.min_margin = margin if self.min_margin is None else min(self.min_margin, margin)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'class': self.class_id,
            'n': self.n,
            'A': self.A,
            'count': self.count,
            'seed': self.seed,
            'violations': self.violations,
            'max_violation': self.max_violation,
            'min_margin': self.min_margin,
            'checks': dict(sorted(self.checks.items())),
            'passed': self.passed,
        }
