"""Text and machine renderings of audit results."""
from __future__ import annotations

import json
from collections import Counter

from .engine import CheckResult, Verdict, all_passed

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _summary(results: list[CheckResult]) -> dict:
    counts = Counter(r.verdict.value for r in results)
    return {
        "pass": counts.get(Verdict.PASS.value, 0),
        "fail": counts.get(Verdict.FAIL.value, 0),
        "fact_assumed": counts.get(Verdict.FACT.value, 0),
        "verdict": "PASS" if all_passed(results) else "FAIL",
    }


def render_text(results: list[CheckResult], scenario: str = "") -> str:
    lines = []
    for r in results:
        line = f"CHECK {r.id} {r.verdict.value} computed={r.computed} bound={r.bound} cite={r.cite}"
        if r.detail:
            line += f" note={r.detail}"
        lines.append(line)
    s = _summary(results)
    head = f"SUMMARY {scenario} " if scenario else "SUMMARY "
    lines.append(f"{head}pass={s['pass']} fail={s['fail']} fact-assumed={s['fact_assumed']} verdict={s['verdict']}")
    return "\n".join(lines) + "\n"


def render_machine(results: list[CheckResult], scenario: str = "", assumptions: dict | None = None) -> str:
    doc = {
        "scenario": scenario,
        "assumptions": assumptions or {},
        "results": [r.to_json() for r in results],
        "summary": _summary(results),
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_report(results: list[CheckResult], fmt: str = "text", scenario: str = "", assumptions=None) -> tuple[str, int]:
    """Rendered report and the matching exit code."""
    if fmt == "text":
        body = render_text(results, scenario)
    elif fmt == "machine":
        body = render_machine(results, scenario, assumptions)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return body, EXIT_PASS if all_passed(results) else EXIT_FAIL
