"""Declarative scenario audits."""
from __future__ import annotations

import importlib.resources
from pathlib import Path

from .engine import AuditOptions, CheckResult, Verdict, all_passed, run_audit
from .loader import AuditScenario, ScenarioError, load_scenario, load_scenario_text
from .report import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, render_report

SHIPPED = ("j032", "j027", "j049", "conductors")


def shipped_scenario_path(name: str) -> Path:
    """Path of a scenario bundled with the package (``j032`` or ``j032.audit.json``)."""
    if not name.endswith(".json"):
        name = f"{name}.audit.json"
    return Path(str(importlib.resources.files("ramaudit.scenarios").joinpath(name)))
