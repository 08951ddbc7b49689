"""Command line entry point."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds, conductor, filtration, newforms
from .audit import (
    EXIT_FAIL,
    EXIT_PASS,
    EXIT_USAGE,
    AuditOptions,
    ScenarioError,
    load_scenario,
    render_report,
    run_audit,
    shipped_scenario_path,
)
from .exact import FactoredRadical, as_rational
from .modrep import groups as grp
from .modrep import modules as mods


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _resolve_scenario(name: str) -> Path:
    path = Path(name)
    if path.exists():
        return path
    shipped = shipped_scenario_path(name)
    if shipped.exists():
        return shipped
    return path


def _table(args) -> bounds.OdlyzkoTable | None:
    if getattr(args, "odlyzko_table", None):
        try:
            return bounds.OdlyzkoTable.load(args.odlyzko_table)
        except OSError as exc:
            raise UsageError(f"cannot read Odlyzko table: {exc.strerror}") from None
    return None


def cmd_run(args, out) -> int:
    scenario = load_scenario(_resolve_scenario(args.scenario))
    options = AuditOptions(unconditional_only=args.unconditional_only, table=_table(args))
    results = run_audit(scenario, options)
    assumptions = {"odlyzko": "unconditional-only" if args.unconditional_only else "as-declared"}
    body, code = render_report(results, args.format, scenario.name, assumptions)
    out.write(body)
    return code


def _orders(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"orders must be comma separated integers: {text!r}") from None


def cmd_herbrand(args, out) -> int:
    F = filtration.RamFiltration(_orders(args.orders))
    out.write(f"orders={','.join(map(str, F.orders))}\n")
    if args.at is not None:
        u = as_rational(args.at)
        out.write(f"phi({u})={filtration.herbrand_phi(F, u)}\n")
    if args.inverse is not None:
        v = as_rational(args.inverse)
        out.write(f"psi({v})={filtration.herbrand_psi(F, v)}\n")
    out.write(f"i_max={filtration.i_max(F)}\n")
    out.write(f"u_max={filtration.u_max(F)}\n")
    out.write(f"different={filtration.different_valuation(F)}\n")
    out.write(f"upper_jumps={','.join(map(str, filtration.upper_jumps(F)))}\n")
    return EXIT_PASS


def cmd_odlyzko(args, out) -> int:
    delta = FactoredRadical.parse(args.delta)
    table = _table(args) or bounds.default_table()
    cap = table.max_degree(delta, args.mode)
    out.write(f"delta={delta.to_text()}\n")
    out.write(f"mode={args.mode}\n")
    out.write(f"max_degree={'beyond table' if cap is None else cap}\n")
    return EXIT_PASS


def cmd_newform_level(args, out) -> int:
    rec = newforms.NewformRecord(
        "cli", args.p, args.n, newforms.LocalCase(args.case), a_chi=args.a_chi, a_eps_chi=args.a_eps_chi
    )
    out.write(f"u={newforms.newform_level_of_ram(rec)}\n")
    return EXIT_PASS


def cmd_newform_table(args, out) -> int:
    for label, u in newforms.classify_table():
        out.write(f"{label} u={u}\n")
    for p in (2, 3, 5, 7):
        out.write(f"cutoff {newforms.max_level_exponent(p).describe()}\n")
    out.write(f"survivors={','.join(newforms.surviving_newforms())}\n")
    return EXIT_PASS


def cmd_modrep_facts(args, out) -> int:
    G = grp.preset(args.preset)
    out.write(f"group={args.preset} order={G.order}\n")
    out.write("classes=" + " ".join(f"{s}x{o}" for s, o in grp.conjugacy_data(G)) + "\n")
    solv = grp.solvable_subgroup_caps(G)
    out.write(f"solvable_caps={solv[0]},{solv[1]}\n")
    out.write(f"normal_subgroup_orders={grp.normal_subgroup_orders(G)}\n")
    if G.order <= 24:
        for p in (2, 3):
            out.write(f"degrees_F{p}={mods.degree_partition_check(G, p)}\n")
        for q in (2, 3):
            embs = mods.embeddings_in_GL2(G, q)
            out.write(f"GL2_F{q}_embeddings={len(embs)}\n")
            for k, e in enumerate(embs):
                traces = " ".join(
                    f"{o}:{sorted(t)}" for o, t in sorted(e.traces_by_order.items())
                )
                out.write(f"  embedding {k} traces {traces}\n")
    return EXIT_PASS


def cmd_conductor_cases(args, out) -> int:
    cl = conductor.enumerate_cases(args.c, args.g, args.require_u_positive, args.delta_zero)
    for r in cl.cases:
        out.write(f"u={r.u} t={r.t} delta={r.delta}\n")
    if cl.rational_delta_slots:
        out.write("rational_delta_slots=" + " ".join(f"({u},{t})" for u, t in cl.rational_delta_slots) + "\n")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ramaudit", description="Exact audits of ramification and discriminant bounds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="audit a scenario file or a shipped scenario name")
    run.add_argument("scenario")
    mode = run.add_mutually_exclusive_group()
    mode.add_argument("--grh", action="store_true", help="use each check's declared table (default)")
    mode.add_argument("--unconditional-only", action="store_true")
    run.add_argument("--format", choices=("text", "machine"), default="text")
    run.add_argument("--odlyzko-table")
    run.set_defaults(func=cmd_run)

    h = sub.add_parser("herbrand", help="Herbrand function data of a filtration")
    h.add_argument("--orders", required=True, help="g_0,g_1,... e.g. 24,12,4,4,4")
    h.add_argument("--at", help="evaluate phi at this lower index")
    h.add_argument("--inverse", help="evaluate psi at this upper index")
    h.set_defaults(func=cmd_herbrand)

    o = sub.add_parser("odlyzko", help="largest degree allowed for a root discriminant")
    o.add_argument("--delta", required=True, help='radical such as "2:5/2,3:3/2"')
    o.add_argument("--mode", choices=bounds.MODES, default="grh")
    o.add_argument("--odlyzko-table")
    o.set_defaults(func=cmd_odlyzko)

    nl = sub.add_parser("newform-level", help="level of ramification of a newform")
    nl.add_argument("--p", type=int, required=True)
    nl.add_argument("--n", type=int, required=True)
    nl.add_argument("--case", choices=[c.value for c in newforms.LocalCase], required=True)
    nl.add_argument("--a-chi", type=int, default=0)
    nl.add_argument("--a-eps-chi", type=int, default=0)
    nl.set_defaults(func=cmd_newform_level)

    nt = sub.add_parser("newform-table", help="recompute the newform table and cutoffs")
    nt.set_defaults(func=cmd_newform_table)

    mr = sub.add_parser("modrep", help="finite group facts")
    mr_sub = mr.add_subparsers(dest="modrep_command", required=True, parser_class=_Parser)
    facts = mr_sub.add_parser("facts")
    facts.add_argument("preset", choices=sorted(grp.PRESETS))
    facts.set_defaults(func=cmd_modrep_facts)

    cd = sub.add_parser("conductor", help="conductor exponent case analysis")
    cd_sub = cd.add_subparsers(dest="conductor_command", required=True, parser_class=_Parser)
    cases = cd_sub.add_parser("cases")
    cases.add_argument("--c", type=int, required=True)
    cases.add_argument("--g", type=int)
    cases.add_argument("--require-u-positive", action="store_true")
    cases.add_argument("--delta-zero", action="store_true")
    cases.set_defaults(func=cmd_conductor_cases)
    return p


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ScenarioError as exc:
        for problem in exc.problems:
            err.write(f"error: {problem}\n")
        return EXIT_USAGE
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except AssertionError as exc:
        err.write(f"regression: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
