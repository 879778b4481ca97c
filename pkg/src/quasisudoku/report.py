from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of a verifier.

    ``failures`` holds one human-readable line per located violation;
    ``details`` carries structured evidence (per-block deficits, lambda
    constants, ...) keyed by whatever the verifier finds natural.
    """

    check: str
    passed: bool
    failures: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"[{status}] {self.check}"
        if self.failures:
            shown = self.failures[:5]
            extra = len(self.failures) - len(shown)
            line += ": " + "; ".join(shown)
            if extra:
                line += f" (+{extra} more)"
        return line

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "passed": self.passed,
            "failures": list(self.failures),
            "details": _jsonable(self.details),
        }


def combine(check: str, reports: list[VerificationReport]) -> VerificationReport:
    """Fold several reports into one that passes iff all of them pass."""
    failures = [f"{r.check}: {f}" for r in reports for f in r.failures]
    return VerificationReport(
        check=check,
        passed=all(r.passed for r in reports),
        failures=failures,
        details={"parts": [r.to_dict() for r in reports]},
    )


def _jsonable(obj):
    if isinstance(obj, dict):
        return {_key(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "tolist"):
        return obj.tolist()
    return obj


def _key(k):
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)
