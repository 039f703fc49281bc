from __future__ import annotations

from typing import Any

from pydantic import BaseModel


class CheckResult(BaseModel, frozen=True, strict=True, extra="forbid"):
    #: Name of the checked property.
    name: str
    passed: bool
    detail: str = ""


class CommandReport(BaseModel, frozen=True, extra="forbid"):
    command: str
    inputs: dict[str, Any]
    outputs: dict[str, Any]
    checks: list[CheckResult] = []

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)


def failure_count_check(name: str, failures: int, total: int, example: object = None) -> CheckResult:
    detail = f"{failures} failures over {total} cases"
    if example is not None:
        detail = f"{detail}, e.g. {example}"
    return CheckResult(name=name, passed=failures == 0, detail=detail)


__all__ = ["CheckResult", "CommandReport", "failure_count_check"]
