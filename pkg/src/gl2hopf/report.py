"""Pass/fail records returned by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    details: Any = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": "pass" if self.passed else "fail", "details": _plain(self.details)}


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, details: Any = "") -> bool:
        self.checks.append(Check(name, bool(passed), details))
        return bool(passed)

    def merge(self, other: "Report", prefix: str | None = None) -> "Report":
        p = other.title if prefix is None else prefix
        for c in other.checks:
            self.checks.append(Check(f"{p}: {c.name}" if p else c.name, c.passed, c.details))
        return self

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]

    def __str__(self) -> str:
        lines = [f"{self.title}: {'pass' if self.ok else 'FAIL'}"]
        for c in self.checks:
            tail = f"  ({c.details})" if c.details not in ("", None) else ""
            lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}{tail}")
        return "\n".join(lines)


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)
