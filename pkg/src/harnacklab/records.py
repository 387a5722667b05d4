"""Verification records: one sampled check of an inequality, plus report helpers."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["VerificationRecord", "summarize", "format_float"]


@dataclass(frozen=True)
class VerificationRecord:
    """One sampled inequality check lhs <= rhs (+ slack).

    ``margin`` is rhs - lhs; ``passed`` is recorded together with the slack the
    comparison used, so a record is self-describing.
    """

    inputs: dict = field(default_factory=dict)
    lhs: float = 0.0
    rhs: float = 0.0
    margin: float = 0.0
    passed: bool = True
    slack: float = 0.0

    @classmethod
    def check(cls, inputs: dict, lhs: float, rhs: float, slack: float = 0.0) -> "VerificationRecord":
        return cls(inputs=inputs, lhs=float(lhs), rhs=float(rhs),
                   margin=float(rhs) - float(lhs), passed=bool(lhs <= rhs + slack),
                   slack=float(slack))


def summarize(records) -> dict:
    """Summary used in every report: checked/passed counts and the worst violation."""
    checked = len(records)
    passed = sum(1 for r in records if r.passed)
    violations = [r.lhs - r.rhs for r in records if not r.passed]
    return {
        "checked": checked,
        "passed": passed,
        "max_violation": max(violations) if violations else 0.0,
    }


def format_float(x: float) -> str:
    """17 significant digits: round-trips any IEEE double exactly."""
    return f"{x:.17g}"
