"""Command line front end for decreasing norm-trace evaluation codes.

Subcommands: field, curve, code, ghw, rghw, quantum, quantum-table, verify.
Exit codes: 0 success, 1 verify mismatch, 2 invalid input, 3 over budget.
"""
import argparse
import os
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

import pandas as pd
from pydantic import ValidationError

from algebra.codes import code_rank, dual_nullspace, dual_structural, evaluate_code, min_weight_bruteforce
from algebra.curve import build_curve
from algebra.errors import BudgetExceededError, MonomialError, NormTraceError
from algebra.field import build_extension, split_prime_power
from algebra.monomial import MonomialSet, build_onepoint_set
from algebra.params import CurveParams
from charts import draw_hierarchy_line, draw_quantum_bar
from engines import cartesian_ghw, ordering_condition, relative_hierarchy, rghw
from oracle.subspaces import gaussian_binomial
from oracle.sweeps import SUITES, run_suite
from quantum import PURITY_NOTE, css_params, dual_pair_params, quantum_table
from utils.cache_manager import get_result_cache
from utils.load import PRESETS_FILE, SETTINGS_FILE, load_presets, load_settings
from utils.logs import logger
from utils.parsing import parse_monomial_spec
from utils.processing import compare_with_published, engine_class, hierarchy_frame, quantum_frame, relative_frame, render
from utils.schemas import (
    CodeReport,
    CurveInfo,
    CurveReport,
    FieldReport,
    GhwReport,
    GhwRow,
    PresetTable,
    QuantumReport,
    QuantumRow,
    RghwReport,
    RghwRow,
    RunConfig,
    Settings,
    dump_report,
)

METHODS = ["exhaustive", "fastpath", "maxcase", "oracle"]
THREADS_ENV = "NORMTRACE_THREADS"
CACHED_COMMANDS = {"ghw", "rghw", "quantum", "quantum-table"}

Payload = Dict[str, Any]


@dataclass
class RunContext:
    settings: Settings
    threads: int
    budget: Optional[int]
    preset: Optional[PresetTable] = None


def _curve_args(parser: argparse.ArgumentParser, with_u: bool = True, required: bool = True) -> None:
    parser.add_argument("--q", type=int, required=required, help="base field size, a prime power")
    parser.add_argument("--s", type=int, required=required, help="extension degree, at least 2")
    if with_u:
        parser.add_argument("--u", type=int, required=required, help="divisor of (q^s-1)/(q-1)")
    parser.add_argument("--modulus", type=lambda text: [int(c) for c in text.split(",")], help="little-endian coefficients of the field modulus")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--budget", type=int, default=None, help="cap on brute-force enumeration")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--settings", default=SETTINGS_FILE)
    common.add_argument("--chart", default=None, help="render an HTML chart to this path")

    parser = argparse.ArgumentParser(prog="normtrace", description="Weights of decreasing norm-trace codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", parents=[common], help="describe GF(q^s)")
    _curve_args(p, with_u=False)

    p = sub.add_parser("curve", parents=[common], help="curve parameters and points")
    _curve_args(p)
    p.add_argument("--points", action="store_true")

    p = sub.add_parser("code", parents=[common], help="evaluation code and its dual")
    _curve_args(p)
    p.add_argument("--monomials", required=True)
    p.add_argument("--emit-generators", action="store_true")
    p.add_argument("--dual", choices=["structural", "nullspace"], default=None)
    p.add_argument("--min-weight", action="store_true")

    p = sub.add_parser("ghw", parents=[common], help="generalized Hamming weights")
    _curve_args(p)
    p.add_argument("--monomials", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=int)
    group.add_argument("--hierarchy", action="store_true")
    p.add_argument("--method", choices=METHODS, default="exhaustive")
    p.add_argument("--bound-only", action="store_true")
    p.add_argument("--no-prune", action="store_true")

    p = sub.add_parser("rghw", parents=[common], help="relative generalized Hamming weights")
    _curve_args(p)
    p.add_argument("--m1")
    p.add_argument("--m2")
    p.add_argument("--lambda1", type=int)
    p.add_argument("--lambda2", type=int)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=int)
    group.add_argument("--hierarchy", action="store_true")

    p = sub.add_parser("quantum", parents=[common], help="CSS parameters of a one-point pair")
    _curve_args(p)
    p.add_argument("--lambda1", type=int, required=True)
    p.add_argument("--lambda2", type=int, required=True)
    p.add_argument("--dual-pair", action="store_true")
    p.add_argument("--g", default=None, help="comparison value printed alongside")

    p = sub.add_parser("quantum-table", parents=[common], help="CSS parameters for many pairs")
    _curve_args(p, required=False)
    p.add_argument("--preset")
    p.add_argument("--presets-file", default=PRESETS_FILE)
    p.add_argument("--rows", help="lambda pairs as l1:l2[:g],...")

    p = sub.add_parser("verify", parents=[common], help="engine against oracle sweeps")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    return parser


def _curve_info(params: CurveParams) -> CurveInfo:
    return CurveInfo(q=params.q, s=params.s, u=params.u, n=params.n, genus=params.genus)


def _params(args: argparse.Namespace) -> CurveParams:
    return CurveParams(args.q, args.s, args.u)


def cmd_field(args: argparse.Namespace, ctx: RunContext) -> Payload:
    p, a = split_prime_power(args.q)
    field = build_extension(p, a, args.s, args.modulus)
    return dump_report(
        FieldReport(
            p=p,
            a=a,
            s=args.s,
            order=field.order,
            modulus=list(field.modulus),
            subfield=sorted(field.codes(field.subfield).tolist()),
        )
    )


def cmd_curve(args: argparse.Namespace, ctx: RunContext) -> Payload:
    params = _params(args)
    points = build_curve(args.q, args.s, args.u, args.modulus).to_json() if args.points else None
    return dump_report(CurveReport(curve=_curve_info(params), points=points))


def cmd_code(args: argparse.Namespace, ctx: RunContext) -> Payload:
    curve = build_curve(args.q, args.s, args.u, args.modulus)
    M, _ = parse_monomial_spec(args.monomials, curve.params)
    C = evaluate_code(curve, M)
    dual = None
    if args.dual == "structural":
        dual = dual_structural(curve, M)
    elif args.dual == "nullspace":
        dual = dual_nullspace(C)
    min_weight = None
    if args.min_weight:
        min_weight = min_weight_bruteforce(C, ctx.budget or ctx.settings.budgets.min_weight, ctx.threads)
    report = CodeReport(
        curve=_curve_info(curve.params),
        monomials=M.labels(),
        n=C.length,
        k=code_rank(C),
        dual=args.dual,
        dual_dimension=code_rank(dual) if dual is not None else None,
        min_weight=min_weight,
        generators=C.to_json() if args.emit_generators else None,
    )
    return dump_report(report)


def cmd_ghw(args: argparse.Namespace, ctx: RunContext) -> Payload:
    params = _params(args)
    M, degree = parse_monomial_spec(args.monomials, params)
    if args.method == "oracle":
        target = build_curve(args.q, args.s, args.u, args.modulus)
        options = {"budget": ctx.budget or ctx.settings.budgets.subspaces}
    else:
        target = params
        options = {}
    if args.method == "exhaustive":
        options = {
            "threads": ctx.threads,
            "scan_budget": ctx.settings.budgets.subset_scan,
            "bound_only": args.bound_only,
            "prune": not args.no_prune,
        }
    engine = engine_class(args.method)(target, **options)
    results = engine.hierarchy(M, degree) if args.hierarchy else [engine.compute(M, args.r, degree)]

    top = params.x_max * (params.y_bound - 1)
    rows = []
    for res in results:
        cartesian = res.cartesian
        if cartesian is None and degree is not None and degree <= top:
            cartesian = cartesian_ghw(params, degree, res.r)
        rows.append(
            GhwRow(
                r=res.r,
                d_r=res.value,
                witness=res.witness.labels() if res.witness is not None else [],
                method=res.method,
                exact=res.exact,
                search=res.search,
                cartesian=cartesian,
                singleton=params.n - len(M) + res.r,
            )
        )
    notes = sorted({note for res in results for note in res.notes})
    return dump_report(GhwReport(curve=_curve_info(params), monomials=M.labels(), k=len(M), results=rows, notes=notes))


def _relative_sets(args: argparse.Namespace, params: CurveParams) -> Tuple[MonomialSet, MonomialSet]:
    if args.lambda1 is not None and args.lambda2 is not None:
        return build_onepoint_set(params, args.lambda1), build_onepoint_set(params, args.lambda2)
    if args.m1 is None or args.m2 is None:
        raise MonomialError("rghw needs --m1 and --m2, or --lambda1 and --lambda2")
    return parse_monomial_spec(args.m1, params)[0], parse_monomial_spec(args.m2, params)[0]


def cmd_rghw(args: argparse.Namespace, ctx: RunContext) -> Payload:
    params = _params(args)
    M1, M2 = _relative_sets(args, params)
    budget = ctx.budget or ctx.settings.budgets.subspaces
    target = params
    top_r = len(M1) - len(M2) if args.hierarchy else args.r
    if not ordering_condition(M1, M2) and gaussian_binomial(len(M1), top_r, params.q**params.s) <= budget:
        target = build_curve(args.q, args.s, args.u, args.modulus)
    kwargs = {"oracle_budget": budget, "scan_budget": ctx.settings.budgets.subset_scan, "threads": ctx.threads}
    results = relative_hierarchy(target, M1, M2, **kwargs) if args.hierarchy else [rghw(target, M1, M2, args.r, **kwargs)]
    report = RghwReport(
        curve=_curve_info(params),
        m1=M1.labels(),
        m2=M2.labels(),
        results=[RghwRow(**res.to_dict()) for res in results],
        notes=sorted({note for res in results for note in res.notes}),
    )
    return dump_report(report)


def cmd_quantum(args: argparse.Namespace, ctx: RunContext) -> Payload:
    params = _params(args)
    build = dual_pair_params if args.dual_pair else css_params
    result = build(params, args.lambda1, args.lambda2)
    row = QuantumRow(**result.to_dict(), g=args.g)
    return dump_report(QuantumReport(curve=_curve_info(params), rows=[row], purity_note=PURITY_NOTE))


def _table_rows(args: argparse.Namespace, ctx: RunContext) -> List[Tuple[int, int, Optional[str]]]:
    if ctx.preset is not None:
        return [(row.lambda1, row.lambda2, row.g) for row in ctx.preset.rows]
    if not args.rows:
        raise MonomialError("quantum-table needs --preset or --rows")
    rows = []
    for item in args.rows.split(","):
        parts = item.split(":")
        if len(parts) not in (2, 3):
            raise MonomialError(f"bad row '{item}', expected l1:l2[:g]")
        rows.append((int(parts[0]), int(parts[1]), parts[2] if len(parts) == 3 else None))
    return rows


def cmd_quantum_table(args: argparse.Namespace, ctx: RunContext) -> Payload:
    params = _params(args)
    rows = _table_rows(args, ctx)
    results = quantum_table(params, [(l1, l2) for l1, l2, _ in rows], threads=ctx.threads)
    out = []
    for i, (result, (_, _, g)) in enumerate(zip(results, rows)):
        row = QuantumRow(**result.to_dict(), g=g)
        if ctx.preset is not None:
            published = ctx.preset.rows[i]
            row.matches_published = compare_with_published(row, published)
            row.note = published.note
        out.append(row)
    return dump_report(QuantumReport(curve=_curve_info(params), preset=args.preset, rows=out, purity_note=PURITY_NOTE))


def cmd_verify(args: argparse.Namespace, ctx: RunContext) -> Payload:
    return dump_report(run_suite(args.suite))


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunContext], Payload]] = {
    "field": cmd_field,
    "curve": cmd_curve,
    "code": cmd_code,
    "ghw": cmd_ghw,
    "rghw": cmd_rghw,
    "quantum": cmd_quantum,
    "quantum-table": cmd_quantum_table,
    "verify": cmd_verify,
}


def tabulate(command: str, payload: Payload) -> Tuple[pd.DataFrame, List[str]]:
    if command == "ghw":
        return hierarchy_frame(payload["results"]), payload["notes"]
    if command == "rghw":
        return relative_frame(payload["results"]), payload["notes"]
    if command in ("quantum", "quantum-table"):
        notes = sorted({n for row in payload["rows"] for n in (row.get("note"),) if n}) + [payload["purity_note"]]
        return quantum_frame(payload["rows"]), notes
    if command == "verify":
        checks = pd.DataFrame(payload["checks"], columns=["name", "passed", "detail"])
        failed = checks[~checks["passed"]]
        summary = [f"suite {payload['suite']}: {len(checks) - len(failed)}/{len(checks)} checks passed"]
        if len(failed):
            return failed, summary
        return pd.DataFrame([{"suite": payload["suite"], "checks": len(checks), "passed": payload["passed"]}]), summary
    flat = {k: v for k, v in payload.items() if k not in ("generators", "points")}
    return pd.json_normalize(flat, sep="."), []


def _settings(path: str) -> Settings:
    if not os.path.exists(path):
        logger.info(f"{path} not found, using default settings")
        return Settings()
    return load_settings(path)


def _threads(args: argparse.Namespace, settings: Settings) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return settings.threads


def _run_config(args: argparse.Namespace, ctx: RunContext) -> Optional[RunConfig]:
    if args.command == "verify":
        return None
    if args.command == "quantum-table" and args.preset:
        presets = load_presets(args.presets_file)
        if args.preset not in presets:
            raise MonomialError(f"unknown preset '{args.preset}', choose from {', '.join(sorted(presets))}")
        ctx.preset = presets[args.preset]
        args.q, args.s, args.u = ctx.preset.q, ctx.preset.s, ctx.preset.u
    if args.q is None or args.s is None or getattr(args, "u", 0) is None:
        raise MonomialError("--q, --s and --u are required")
    skip = {"command", "q", "s", "u", "modulus", "format", "threads", "budget", "no_cache", "cache_dir", "settings", "chart"}
    return RunConfig(
        command=args.command,
        q=args.q,
        s=args.s,
        u=getattr(args, "u", None),
        modulus=args.modulus,
        monomial_spec=getattr(args, "monomials", None),
        options={k: v for k, v in sorted(vars(args).items()) if k not in skip},
        output=args.format,
        threads=ctx.threads,
        budget=ctx.budget,
    )


def _draw(command: str, payload: Payload, table: pd.DataFrame, path: str) -> None:
    if command == "ghw":
        chart = draw_hierarchy_line(table, payload["curve"]["n"], payload["k"])
    elif command in ("quantum", "quantum-table"):
        chart = draw_quantum_bar(table)
    else:
        logger.warning(f"no chart for {command}")
        return
    chart.render(path)


def dispatch(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        settings = _settings(args.settings)
        ctx = RunContext(settings=settings, threads=_threads(args, settings), budget=args.budget)
        config = _run_config(args, ctx)
        cache = None
        if config is not None and args.command in CACHED_COMMANDS and settings.cache.enabled and not args.no_cache:
            cache = get_result_cache(args.cache_dir or settings.cache.directory)
        payload = cache.get(config) if cache is not None else None
        if payload is None:
            payload = COMMANDS[args.command](args, ctx)
            if cache is not None:
                cache.put(config, payload)
        table, notes = tabulate(args.command, payload)
        sys.stdout.write(render(payload, args.format, table, notes))
        if args.chart:
            _draw(args.command, payload, table, args.chart)
    except (NormTraceError, ValidationError) as e:
        logger.error(f"{args.command}: {e}")
        sys.stderr.write(f"error: {e}\n")
        return 2
    except BudgetExceededError as e:
        logger.error(f"{args.command}: {e}")
        sys.stderr.write(f"budget exceeded: {e}\n")
        return 3

    if args.command == "verify" and not payload.get("passed", False):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(dispatch())
