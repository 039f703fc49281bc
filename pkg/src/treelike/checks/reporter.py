from __future__ import annotations

from typing import Any

import json

import rich.console

from .base import CommandReport


def render_json(report: CommandReport) -> str:
    return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def _cell(value: Any) -> str:
    return value if isinstance(value, str) else json.dumps(value, sort_keys=True)


def render_tsv(report: CommandReport) -> str:
    lines: list[str] = []
    rows = report.outputs.get("rows")
    if isinstance(rows, list):
        lines.extend("\t".join(_cell(cell) for cell in row) for row in rows)
    else:
        lines.extend(f"{key}\t{_cell(value)}" for key, value in sorted(report.outputs.items()))
    if report.checks:
        lines.append("check\tpassed\tdetail")
        lines.extend(
            f"{check.name}\t{str(check.passed).lower()}\t{check.detail}" for check in report.checks
        )
    return "".join(f"{line}\n" for line in lines)


class TerminalReporter:
    def report_checks(self, report: CommandReport) -> None:
        console = rich.console.Console(stderr=True, width=999)
        for check in report.checks:
            mark = "[green]pass[/green]" if check.passed else "[bold red]FAIL[/bold red]"
            console.print(f"{mark} {check.name} [grey50]{check.detail}[/grey50]", highlight=False)
        if report.checks and report.ok:
            console.print("[green]All checks passed.")


__all__ = ["render_json", "render_tsv", "TerminalReporter"]
