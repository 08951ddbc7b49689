"""Read and validate scenario files, reporting problems with line numbers."""
from __future__ import annotations

import json
import json.decoder
import json.scanner
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import jsonschema
from sympy import isprime

from ..exact import FactoredRadical, IdealLabel, as_rational
from .schema import SCENARIO_SCHEMA


class ScenarioError(ValueError):
    """One or more problems, each already prefixed with its location."""

    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("\n".join(problems))


class _PosDict(dict):
    line = 0


def _line_of(text: str, index: int) -> int:
    return text.count("\n", 0, index) + 1


class _PositionDecoder(json.JSONDecoder):
    """JSON decoder whose objects remember the line they start on."""

    def __init__(self, text: str):
        super().__init__(object_pairs_hook=_PosDict)
        self._text = text
        plain = json.decoder.JSONObject

        def parse_object(s_and_end, strict, scan_once, object_hook, object_pairs_hook, memo=None):
            s, end = s_and_end
            obj, new_end = plain(s_and_end, strict, scan_once, object_hook, object_pairs_hook, memo)
            if isinstance(obj, _PosDict):
                obj.line = _line_of(s, end - 1)
            return obj, new_end

        self.parse_object = parse_object
        self.scan_once = json.scanner.py_make_scanner(self)


def parse_json_with_lines(text: str) -> Any:
    try:
        return _PositionDecoder(text).decode(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError([f"line {exc.lineno}: invalid JSON: {exc.msg}"]) from None


def _locate(root, path) -> int:
    line = getattr(root, "line", 1)
    node = root
    for key in path:
        try:
            node = node[key]
        except (KeyError, IndexError, TypeError):
            break
        line = getattr(node, "line", line)
    return line


def _path_text(path) -> str:
    return "/".join(str(p) for p in path) or "<root>"


@dataclass(frozen=True)
class FieldData:
    name: str
    degree: int
    disc: Any = None


@dataclass
class AuditScenario:
    name: str
    labels: dict[str, IdealLabel]
    fields: dict[str, FieldData]
    steps: dict[str, dict]
    checks: list[dict]
    description: str = ""
    source: str = "<memory>"
    raw: Any = field(default=None, repr=False)

    @property
    def facts(self) -> list[dict]:
        return [s for s in self.steps.values() if s["kind"] == "fact"]


def _most_specific(err: jsonschema.ValidationError) -> jsonschema.ValidationError:
    # descend into if/then branches so the message names the real property
    best = err
    while best.context:
        best = max(best.context, key=lambda e: len(e.absolute_path))
    return best


def _schema_problems(data) -> list[str]:
    validator = jsonschema.Draft202012Validator(SCENARIO_SCHEMA)
    problems = []
    for err in sorted(validator.iter_errors(data), key=lambda e: list(map(str, e.absolute_path))):
        err = _most_specific(err)
        path = list(err.absolute_path)
        problems.append(f"line {_locate(data, path)}: {_path_text(path)}: {err.message}")
    return problems


_EXPR_KEYS = {"ref", "root_disc_of", "product", "disc_of_step"}


def _walk_exprs(node, path):
    """Yield (path, radical-literal) for every radical literal inside an expression tree."""
    if isinstance(node, dict):
        if node.keys() & _EXPR_KEYS:
            if "product" in node:
                for i, sub in enumerate(node["product"]):
                    yield from _walk_exprs(sub, path + ["product", i])
            return
        yield path, node


_EXPR_FIELDS = ("delta_K", "delta", "expect", "base", "rel_disc")


def _semantic_problems(data) -> list[str]:
    problems = []

    def bad(path, msg):
        problems.append(f"line {_locate(data, path)}: {_path_text(path)}: {msg}")

    labels = data["labels"]
    fields = {f["name"] for f in data["fields"]}
    ids: set[str] = set()

    for name, info in labels.items():
        if not isprime(info["p"]):
            bad(["labels", name], f"residue characteristic {info['p']} is not prime")

    def check_radical(path, rad):
        for key in rad:
            if key.isdigit():
                if not isprime(int(key)):
                    bad(path, f"{key} is not prime")
            elif key not in labels:
                bad(path, f"unregistered prime label {key!r}")
        for key, val in rad.items():
            try:
                as_rational(val)
            except (ValueError, ZeroDivisionError):
                bad(path + [key], f"malformed rational {val!r}")

    for i, f in enumerate(data["fields"]):
        if "disc" in f:
            check_radical(["fields", i, "disc"], f["disc"])

    for i, step in enumerate(data["steps"]):
        if step["id"] in ids:
            bad(["steps", i, "id"], f"duplicate id {step['id']!r}")
        ids.add(step["id"])
        if step["kind"] == "characters":
            for j, entry in enumerate(step["entries"]):
                check_radical(["steps", i, "entries", j, "conductor"], entry["conductor"])
        if step["kind"] == "filtration":
            orders = step["orders"]
            for a, b in zip(orders, orders[1:]):
                if a % b:
                    bad(["steps", i, "orders"], f"{b} does not divide {a}")

    char_steps = {s["id"] for s in data["steps"] if s["kind"] == "characters"}
    names: set[str] = set()
    for i, chk in enumerate(data["checks"]):
        path = ["checks", i]
        if chk["id"] in ids:
            bad(path + ["id"], f"duplicate id {chk['id']!r}")
        ids.add(chk["id"])
        for key in _EXPR_FIELDS:
            if key in chk and isinstance(chk[key], dict):
                for sub_path, rad in _walk_exprs(chk[key], path + [key]):
                    check_radical(sub_path, rad)
                for ref in _refs(chk[key]):
                    kind, target = ref
                    if kind == "ref" and target not in names:
                        bad(path + [key], f"reference to undefined value {target!r}")
                    if kind == "field" and target not in fields:
                        bad(path + [key], f"unknown field {target!r}")
                    if kind == "step" and target not in char_steps:
                        bad(path + [key], f"unknown character step {target!r}")
        if "violation" in chk:
            for kind, target in _refs(chk["violation"]["bound"]):
                if kind == "ref" and target not in names:
                    bad(path + ["violation"], f"reference to undefined value {target!r}")
            for sub_path, rad in _walk_exprs(chk["violation"]["bound"], path + ["violation", "bound"]):
                check_radical(sub_path, rad)
        for key in ("step",):
            if key in chk and chk[key] not in {s["id"] for s in data["steps"]}:
                bad(path + [key], f"unknown step {chk[key]!r}")
        for j, sid in enumerate(chk.get("increments", [])):
            if sid not in {s["id"] for s in data["steps"] if s["kind"] == "tame"}:
                bad(path + ["increments", j], f"unknown tame step {sid!r}")
        for j, sid in enumerate(chk.get("uses", [])):
            if sid not in {s["id"] for s in data["steps"]}:
                bad(path + ["uses", j], f"unknown step {sid!r}")
        if chk.get("type") == "root_disc" and chk["field"] not in fields:
            bad(path + ["field"], f"unknown field {chk['field']!r}")
        if chk.get("type") == "local_increment" and chk["label"] not in labels:
            bad(path + ["label"], f"unregistered prime label {chk['label']!r}")
        if "as" in chk:
            names.add(chk["as"])
    return problems


def _refs(expr):
    if not isinstance(expr, dict):
        return
    if "ref" in expr:
        yield ("ref", expr["ref"])
    elif "root_disc_of" in expr:
        yield ("field", expr["root_disc_of"])
    elif "disc_of_step" in expr:
        yield ("step", expr["disc_of_step"])
    elif "product" in expr:
        for sub in expr["product"]:
            yield from _refs(sub)


def load_scenario_text(text: str, source: str = "<string>") -> AuditScenario:
    if not text.strip():
        raise ScenarioError([f"{source}: line 1: empty scenario file"])
    try:
        data = parse_json_with_lines(text)
    except ScenarioError as exc:
        raise ScenarioError([f"{source}: {p}" for p in exc.problems]) from None
    problems = _schema_problems(data)
    if not problems:
        problems = _semantic_problems(data)
    if problems:
        raise ScenarioError([f"{source}: {p}" for p in problems])
    labels = {
        name: IdealLabel(name, info["p"], info["f"]) for name, info in sorted(data["labels"].items())
    }
    fields = {
        f["name"]: FieldData(
            f["name"], f["degree"], FactoredRadical.from_mapping(f["disc"], labels) if "disc" in f else None
        )
        for f in data["fields"]
    }
    steps = {s["id"]: s for s in data["steps"]}
    return AuditScenario(
        data["name"], labels, fields, steps, list(data["checks"]), data.get("description", ""), source, data
    )


def load_scenario(path: str | Path) -> AuditScenario:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioError([f"{path}: cannot read: {exc.strerror}"]) from None
    return load_scenario_text(text, str(path))
