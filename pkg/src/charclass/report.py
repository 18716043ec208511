"""Named pass/fail checks with exact residuals, shared by the verify suites."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    """One verification item: a name, a verdict and the exact evidence."""

    name: str
    passed: bool
    residual: str | None = None
    detail: str | None = None

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = ""
        if self.residual not in (None, "0"):
            extra += f" residual={self.residual}"
        if self.detail:
            extra += f" ({self.detail})"
        return f"{status} {self.name}{extra}"


def all_passed(checks) -> bool:
    return all(c.passed for c in checks)
