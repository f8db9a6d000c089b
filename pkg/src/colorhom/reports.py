"""Pass/fail reports returned by the validators."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    witness: str | None = None
    subjects: tuple = ()  # names of the offending basis elements or generators
    location: str | None = None  # filled in by the spec loader, "line:col"

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.location is not None:
            d["location"] = self.location
        return d


@dataclass
class ValidationReport:
    subject: str
    checks: list[Check] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, passed: bool, witness: str | None = None, subjects: tuple = ()) -> bool:
        self.checks.append(Check(name, bool(passed), None if passed else witness,
                                 () if passed else tuple(subjects)))
        return passed

    def extend(self, other: ValidationReport, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.subjects, c.location))
        for k, v in other.info.items():
            self.info[prefix + k] = v

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def failed_names(self) -> set[str]:
        return {c.name.split("[")[0] for c in self.failures()}

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "n_checks": len(self.checks),
            "failures": [c.to_dict() for c in self.failures()],
            "info": self.info,
        }

    def __bool__(self) -> bool:
        return self.passed
