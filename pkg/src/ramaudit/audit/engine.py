"""Evaluate scenario checks with exact arithmetic."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Callable

from .. import bounds, conductor, filtration, newforms
from ..exact import (
    FactoredRadical,
    as_rational,
    normalize_ideal_labels,
    radical_approx,
)
from ..modrep import groups as grp
from ..modrep import modules as mods
from .loader import AuditScenario


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    FACT = "FACT-ASSUMED"


@dataclass(frozen=True)
class CheckResult:
    id: str
    kind: str
    verdict: Verdict
    computed: str
    bound: str
    cite: str
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "verdict": self.verdict.value,
            "computed": self.computed,
            "bound": self.bound,
            "cite": self.cite,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class AuditOptions:
    """``unconditional_only`` evaluates every Odlyzko cap with the unconditional table."""

    unconditional_only: bool = False
    table: bounds.OdlyzkoTable | None = None


class _Context:
    def __init__(self, scenario: AuditScenario, options: AuditOptions):
        self.s = scenario
        self.options = options
        self.table = options.table or bounds.default_table()
        self.values: dict[str, Any] = {}

    def radical(self, data) -> FactoredRadical:
        return FactoredRadical.from_mapping(data, self.s.labels)

    def expr(self, node) -> FactoredRadical:
        if node is None:
            return FactoredRadical()
        if "ref" in node:
            val = self.values[node["ref"]]
            if not isinstance(val, FactoredRadical):
                raise TypeError(f"{node['ref']!r} is not a radical")
            return val
        if "root_disc_of" in node:
            fld = self.s.fields[node["root_disc_of"]]
            if fld.disc is None:
                raise ValueError(f"field {fld.name} has no declared discriminant")
            return bounds.root_discriminant(normalize_ideal_labels(fld.disc), fld.degree)
        if "disc_of_step" in node:
            return bounds.conductor_discriminant(self.characters(node["disc_of_step"]))
        if "product" in node:
            return bounds.product(self.expr(sub) for sub in node["product"])
        return self.radical(node)

    def characters(self, step_id: str) -> bounds.CharacterConductorMultiset:
        step = self.s.steps[step_id]
        if step["kind"] != "characters":
            raise ValueError(f"step {step_id!r} is not a character step")
        entries = tuple((self.radical(e["conductor"]), e["multiplicity"]) for e in step["entries"])
        return bounds.CharacterConductorMultiset(entries, step.get("degree"))

    def filtration_step(self, step_id: str):
        step = self.s.steps[step_id]
        if step["kind"] != "filtration":
            raise ValueError(f"step {step_id!r} is not a filtration step")
        F = filtration.RamFiltration(tuple(step["orders"]), step.get("total_group_order", 0))
        return F, step.get("residue_degree", 1)


def _fmt(x) -> str:
    if isinstance(x, FactoredRadical):
        return x.to_text()
    if isinstance(x, (list, tuple)):
        return "[" + ",".join(_fmt(v) for v in x) + "]"
    return str(x)


class _Outcome:
    """Accumulates sub-conditions of one check."""

    def __init__(self):
        self.ok = True
        self.notes: list[str] = []
        self.computed: list[str] = []
        self.bound: list[str] = []

    def require(self, cond: bool, note: str):
        if not cond:
            self.ok = False
            self.notes.append(note)

    def compare(self, label: str, computed, expected):
        self.computed.append(f"{label}:{_fmt(computed)}" if label else _fmt(computed))
        self.bound.append(f"{label}:{_fmt(expected)}" if label else _fmt(expected))
        self.require(computed == expected, f"{label or 'value'} {_fmt(computed)} != {_fmt(expected)}")


def _violation(ctx: _Context, out: _Outcome, value: FactoredRadical, cfg: dict):
    bound = normalize_ideal_labels(ctx.expr(cfg["bound"]))
    p = cfg["prime"]
    got, lim = value.exponent(p), bound.exponent(p)
    violates = got >= lim  # bounds are strict
    out.computed.append(f"v{p}:{got}")
    out.bound.append(f"v{p}<{lim}")
    expected = cfg["expect"] == "violates"
    out.require(violates == expected, f"exponent at {p} is {got} against strict bound {lim}")


def _approx(out: _Outcome, value: FactoredRadical, cfg: dict | None):
    if not cfg:
        return
    text = radical_approx(value, cfg["digits"]).text
    out.computed.append(f"~{text}")
    out.require(text == cfg["text"], f"decimal {text} != {cfg['text']}")


def _check_fontaine(ctx, c, out):
    delta = ctx.expr(c.get("delta_K"))
    b = bounds.fontaine_bound(delta, c["p"], as_rational(c["i"]), c["ell"])
    out.compare("", b.value, ctx.expr(c["expect"]))
    _approx(out, b.value, c.get("approx"))
    return b.value


def _check_odlyzko(ctx, c, out):
    delta = normalize_ideal_labels(ctx.expr(c["delta"]))
    mode = "unconditional" if ctx.options.unconditional_only else c["mode"]
    cap = ctx.table.max_degree(delta, mode)
    out.computed.append(f"cap[{mode}]={'none' if cap is None else cap}")
    out.bound.append(f"cap<={c['cap_at_most']}")
    out.require(cap is not None and cap <= c["cap_at_most"], f"table cap {cap} exceeds {c['cap_at_most']}")
    if cap is not None and "relative_to_degree" in c:
        rel = (cap - 1) // c["relative_to_degree"]
        out.computed.append(f"relative<={rel}")
        out.bound.append(f"relative<={c.get('relative_at_most', rel)}")
        if "relative_at_most" in c:
            out.require(rel <= c["relative_at_most"], f"relative degree may reach {rel}")
    if "excludes_degree" in c:
        out.bound.append(f"excludes {c['excludes_degree']}")
        out.require(cap is not None and cap <= c["excludes_degree"], f"degree {c['excludes_degree']} not excluded")
    return cap


def _check_root_disc(ctx, c, out):
    fld = ctx.s.fields[c["field"]]
    if fld.disc is None:
        raise ValueError(f"field {fld.name} has no declared discriminant")
    val = bounds.root_discriminant(normalize_ideal_labels(fld.disc), fld.degree)
    out.compare("", val, ctx.expr(c["expect"]))
    return val


def _tame_increment(ctx, step_id) -> tuple[int, Fraction]:
    st = ctx.s.steps[step_id]
    return st["prime"], bounds.tame_root_disc_increment(st["f"], st["g"], st["deg_K"], st.get("e_prime"))


def _check_tame_extend(ctx, c, out):
    val = normalize_ideal_labels(ctx.expr(c["base"]))
    for sid in c["increments"]:
        p, inc = _tame_increment(ctx, sid)
        val = val * FactoredRadical({p: inc})
    out.compare("", val, normalize_ideal_labels(ctx.expr(c["expect"])))
    _approx(out, val, c.get("approx"))
    if "violation" in c:
        _violation(ctx, out, val, c["violation"])
    return val


def _check_conductor_disc(ctx, c, out):
    chars = ctx.characters(c["step"])
    disc = bounds.conductor_discriminant(chars)
    out.compare("", disc, ctx.expr(c["expect"]))
    if "prime_degree" in c:
        nontrivial = [cond for cond, _ in chars.entries if not cond.is_one()]
        out.require(len(nontrivial) == 1, "c^(p-1) needs a single nontrivial conductor")
        if len(nontrivial) == 1:
            via = bounds.prime_degree_discriminant(nontrivial[0], c["prime_degree"])
            out.require(via == disc, f"c^(p-1) = {via.to_text()} disagrees with the product")
    return disc


def _check_extend(ctx, c, out):
    base = normalize_ideal_labels(ctx.expr(c["base"]))
    rel = normalize_ideal_labels(ctx.expr(c["rel_disc"]))
    val = bounds.extend_root_disc(base, rel, c["degree_L"])
    if "expect" in c:
        out.compare("", val, normalize_ideal_labels(ctx.expr(c["expect"])))
    else:
        out.computed.append(val.to_text())
    if "violation" in c:
        _violation(ctx, out, val, c["violation"])
    return val


def _check_local_increment(ctx, c, out):
    chars = ctx.characters(c["step"])
    disc = bounds.conductor_discriminant(chars)
    label = ctx.s.labels[c["label"]]
    v = disc.exponent(label)
    inc = bounds.root_disc_increment(c["f"], c["g"], c["deg_K"], v, c["local_degree"])
    val = normalize_ideal_labels(ctx.expr(c["base"])) * FactoredRadical({c["prime"]: inc})
    out.computed.append(f"v_local={v} increment={inc}")
    out.compare("", val, normalize_ideal_labels(ctx.expr(c["expect"])))
    return val


def _check_level(ctx, c, out):
    F, f = ctx.filtration_step(c["step"])
    if "expect_u_max" in c:
        out.compare("u", filtration.u_max(F), as_rational(c["expect_u_max"]))
    if "expect_i_max" in c:
        out.compare("i", filtration.i_max(F), as_rational(c["expect_i_max"]))
    if "level" in c:
        got = filtration.is_level(F, as_rational(c["level"]))
        out.compare(f"level<={c['level']}", got, c.get("expect_is_level", True))
    if "expect_different" in c:
        out.compare("different", filtration.different_valuation(F), as_rational(c["expect_different"]))
    if "expect_disc_valuation" in c:
        out.compare("disc", filtration.discriminant_valuation(F, f), as_rational(c["expect_disc_valuation"]))
    return filtration.u_max(F)


def _normalise_expect(x):
    if isinstance(x, list):
        return [_normalise_expect(v) for v in x]
    return x


def _check_group(ctx, c, out):
    G = grp.preset(c["preset"])
    prop = c["property"]
    args = c.get("args", {})
    if prop == "order":
        got: Any = G.order
    elif prop == "conjugacy_data":
        got = [list(x) for x in grp.conjugacy_data(G)]
    elif prop == "degree_partition":
        got = mods.degree_partition_check(G, args["p"])
    elif prop == "solvable_caps":
        got = list(grp.solvable_subgroup_caps(G))
    elif prop == "normal_subgroup_orders":
        got = grp.normal_subgroup_orders(G)
    elif prop == "normal_cyclic_subgroup_orders":
        got = grp.normal_cyclic_subgroup_orders(G)
    elif prop == "quotient_isomorphic":
        kernel = G.closure([grp.element_from_word(G, w) for w in args["kernel"]])
        got = grp.quotient_isomorphic(G, kernel, grp.preset(args["target"]))
    elif prop == "gl2_traces":
        embs = mods.embeddings_in_GL2(G, args["q"])
        order = args["order"]
        got = sorted(set().union(*(e.traces_by_order.get(order, frozenset()) for e in embs))) if embs else []
    else:  # pragma: no cover - schema rejects others
        raise ValueError(prop)
    out.compare(prop, got, _normalise_expect(c["expect"]))
    return got


def _check_f2s3(ctx, c, out):
    S = grp.preset("S3")
    M = mods.MatrixModule.on_named(S, 2, {"sigma": c["sigma"], "tau": c["tau"]})
    rep = mods.analyse_f2s3(M)
    out.compare("semisimple", rep.semisimple, c["expect_semisimple"])
    out.computed.append(f"simple={rep.simple_submodule_count} sigma_trivial_simple={rep.sigma_trivial_simple_count}")
    out.require(sum(rep.split_dims) == M.dim, "sigma-splitting fails")
    return rep.semisimple


def _check_fixed_space(ctx, c, out):
    fs = mods.fixed_space_dim(c["generators"], c["dim"])
    out.compare("dim", fs.dim, c["expect_dim"])
    out.require(fs.orbit_congruence, "orbit congruence fails")
    out.require(fs.dim % 2 == 0, "fixed dimension is odd")
    return fs.dim


def _check_cases(ctx, c, out):
    cl = conductor.enumerate_cases(
        c["c"], c.get("g"), c.get("require_u_positive", False), c.get("delta_zero", False)
    )
    got = [[r.u, r.t, int(r.delta)] for r in cl.cases]
    out.compare("", got, [[int(as_rational(x)) for x in row] for row in c["expect"]])
    return got


def _check_cexp(ctx, c, out):
    r = conductor.ReductionData(c["u"], c["t"], as_rational(c["delta"]))
    val = conductor.conductor_exponent(r)
    out.compare("", val, as_rational(c["expect"]))
    return val


def _check_wild(ctx, c, out):
    val = conductor.wild_mass_level_bound(c["min_codim"], as_rational(c["delta"]))
    out.compare("", val, as_rational(c["expect"]))
    return val


def _check_mestre(ctx, c, out):
    val = conductor.mestre_check(c["N"], c["g"])
    out.compare("", val, c["expect"])
    return val


HANDLERS: dict[str, Callable] = {
    "fontaine_bound": _check_fontaine,
    "odlyzko_cap": _check_odlyzko,
    "root_disc": _check_root_disc,
    "tame_extend": _check_tame_extend,
    "conductor_discriminant": _check_conductor_disc,
    "extend_root_disc": _check_extend,
    "local_increment": _check_local_increment,
    "level": _check_level,
    "group": _check_group,
    "f2s3_module": _check_f2s3,
    "fixed_space": _check_fixed_space,
    "conductor_cases": _check_cases,
    "conductor_exponent": _check_cexp,
    "wild_mass_bound": _check_wild,
    "mestre": _check_mestre,
}


def _fact_result(step: dict) -> CheckResult:
    payload = ";".join(f"{k}={_payload_text(v)}" for k, v in sorted(step["payload"].items()))
    return CheckResult(step["id"], step["fact_kind"], Verdict.FACT, payload, "-", step["provenance"])


def _payload_text(v) -> str:
    if isinstance(v, dict):
        return ",".join(f"{k}:{v[k]}" for k in sorted(v))
    return str(v)


def run_audit(scenario: AuditScenario, options: AuditOptions | None = None) -> list[CheckResult]:
    """Facts first (echoed, never computed), then checks in file order."""
    ctx = _Context(scenario, options or AuditOptions())
    results = [_fact_result(s) for s in scenario.facts]
    for c in scenario.checks:
        out = _Outcome()
        try:
            value = HANDLERS[c["type"]](ctx, c, out)
        except (ValueError, ArithmeticError, KeyError, TypeError) as exc:
            out.require(False, f"error: {exc}")
            value = None
        if "as" in c and value is not None:
            ctx.values[c["as"]] = value
        verdict = Verdict.PASS if out.ok else Verdict.FAIL
        results.append(
            CheckResult(
                c["id"],
                c["type"],
                verdict,
                " ".join(out.computed) or "-",
                " ".join(out.bound) or "-",
                c["cite"],
                "; ".join(out.notes),
            )
        )
    return results


def all_passed(results: list[CheckResult]) -> bool:
    return all(r.verdict is not Verdict.FAIL for r in results)
