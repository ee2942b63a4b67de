"""Verification report models."""

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckResult:
    """Outcome of one named check within a suite."""

    name: str
    threshold: float
    cases: int = 0
    max_residual: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.threshold

    def record(self, residual: float) -> None:
        """Fold one case's residual into the running maximum."""
        self.cases += 1
        # NaN never compares <= threshold, keep it visible
        if residual != residual or residual > self.max_residual:
            self.max_residual = residual

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "name": self.name,
            "cases": self.cases,
            "max_residual": self.max_residual,
            "threshold": self.threshold,
            "pass": self.passed,
        }
        if self.details:
            data["details"] = self.details
        return data


@dataclass
class SuiteReport:
    """Aggregated result of a verification suite."""

    suite: str
    seed: int
    cases: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        return max((c.max_residual for c in self.checks), default=0.0)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases,
            "max_residual": self.max_residual,
            "pass": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }
