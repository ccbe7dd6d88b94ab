"""Command-line interface.

Subcommands: classify, check, enumerate, construct, verify, automorphisms.
Output is a deterministic text table by default or a key-sorted JSON
report with --format json.  Exit codes: 0 success, 1 verification
failure, 2 usage/parse error, 3 bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .cayley import (
    build_cayley,
    code_report,
    connection_set,
    enumerate_perfect_codes,
    is_perfect_code,
    is_total_perfect_code,
)
from .criteria import (
    construct_connection_set_normal,
    decide_subgroup_code,
    dihedral_construct_sets,
    generic_subgroup_code_decision,
)
from .errors import BoundExceededError, CayleyCodesError, GroupSpecError
from .groups import all_automorphisms, all_subgroups, is_normal, subgroup_generated
from .pcp import is_pcp_automorphism, is_tpcp_automorphism
from .groups import is_power_automorphism, is_subgroup
from .specparse import parse_element_list, parse_group_spec
from .verify import SUITES, run_suite

ENV_MAX_ORDER = "CAYLEYCODES_MAX_ORDER"


def _max_order(default: int) -> int:
    value = os.environ.get(ENV_MAX_ORDER)
    return int(value) if value else default


def _report(command: str, spec: str | None, results, started: float) -> dict:
    return {
        "command": command,
        "group": spec,
        "results": results,
        "elapsed_seconds": round(time.perf_counter() - started, 3),
        "version": __version__,
    }


def _emit(report: dict, fmt: str, text_lines):
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_classify(args) -> int:
    started = time.perf_counter()
    g = parse_group_spec(args.spec)
    bound = _max_order(64)
    if g.order > bound:
        raise BoundExceededError(f"|G|={g.order} exceeds bound {bound}")
    if args.subgroup:
        gens = parse_element_list(g, args.subgroup)
        subs = [subgroup_generated(g, gens)]
    else:
        subs = all_subgroups(g, max_order=bound)
    rows = []
    for h in subs:
        verdict = decide_subgroup_code(g, h)
        rows.append(
            {
                "subgroup": list(h.elements),
                "order": h.order,
                "index": g.order // h.order,
                "normal": is_normal(g, h),
                **verdict.to_json(args.spec, h),
            }
        )
    report = _report("classify", args.spec, rows, started)
    lines = [
        f"group {args.spec}  order {g.order}  subgroups {len(rows)}",
        f"{'order':>5} {'index':>5} {'normal':>6} {'perfect':>7} {'total':>5}"
        f" {'method':<18} elements",
    ]
    for row in rows:
        witness = row["witness"]
        note = ""
        if witness["type"] == "failing_g":
            note = f"  witness g={witness['value']}"
        lines.append(
            f"{row['order']:>5} {row['index']:>5} {str(row['normal']):>6}"
            f" {str(row['perfect']):>7} {str(row['total_perfect']):>5}"
            f" {row['method']:<18} {row['subgroup']}{note}"
        )
    _emit(report, args.format, lines)
    return 0


def cmd_check(args) -> int:
    started = time.perf_counter()
    g = parse_group_spec(args.spec)
    s = parse_element_list(g, args.conn)
    code = parse_element_list(g, args.code)
    try:
        connection_set(g, s)
    except CayleyCodesError as exc:
        raise GroupSpecError(str(exc)) from exc
    subgroup = None
    if is_subgroup(g, set(code) | {g.identity}) and g.identity in code:
        subgroup = subgroup_generated(g, code)
    result = code_report(g, args.spec, s, code, subgroup, total=args.total)
    report = _report("check", args.spec, result, started)
    mode = "total perfect" if args.total else "perfect"
    checks = result["checks"]
    lines = [
        f"group {args.spec}  S={result['connection_set']}  C={result['code']}",
        f"{mode} code: definition={checks['definition']}"
        f" group_ring={checks['group_ring']} transversal={checks['transversal']}",
    ]
    _emit(report, args.format, lines)
    return 0


def cmd_enumerate(args) -> int:
    started = time.perf_counter()
    g = parse_group_spec(args.spec)
    bound = _max_order(24)
    s = parse_element_list(g, args.conn)
    try:
        conn = connection_set(g, s)
    except CayleyCodesError as exc:
        raise GroupSpecError(str(exc)) from exc
    graph = build_cayley(g, conn)
    codes = enumerate_perfect_codes(graph, total=args.total, max_order=bound)
    results = {"codes": [list(c) for c in codes], "count": len(codes)}
    report = _report("enumerate", args.spec, results, started)
    mode = "total perfect" if args.total else "perfect"
    lines = [f"group {args.spec}  S={sorted(s)}  {mode} codes: {len(codes)}"]
    lines += [f"  {list(c)}" for c in codes]
    _emit(report, args.format, lines)
    return 0


def cmd_construct(args) -> int:
    started = time.perf_counter()
    g = parse_group_spec(args.spec)
    gens = parse_element_list(g, args.subgroup)
    h = subgroup_generated(g, gens)
    conn = None
    if (
        g.kind == "dihedral"
        and h.order < g.order
        and any(x >= g.order // 2 for x in h.elements)
    ):
        # H = <a^t, a^s b>: the explicit reflection sets apply
        n = g.order // 2
        rotations = [x for x in h.elements if x < n and x != g.identity]
        t = min(rotations) if rotations else n
        s = min(x - n for x in h.elements if x >= n)
        r_conn, s_conn = dihedral_construct_sets(n, t, s)
        conn = r_conn if args.total else s_conn
    elif is_normal(g, h):
        conn = construct_connection_set_normal(g, h, total=args.total)
    else:
        verdict = generic_subgroup_code_decision(g, h, total=args.total)
        witness = verdict.witness or {}
        wanted = verdict.total if args.total else verdict.perfect
        if not wanted or witness.get("type") != "connection_set":
            raise CayleyCodesError(
                "no construction available for this subgroup"
            )
        conn = connection_set(g, witness["value"])
    graph = build_cayley(g, conn)
    verified = (
        is_total_perfect_code(graph, h.elements)
        if args.total
        else is_perfect_code(graph, h.elements)
    )
    if not verified:
        raise CayleyCodesError("constructed set failed verification; not printed")
    results = {
        "subgroup": list(h.elements),
        "connection_set": list(conn.sorted()),
        "total": args.total,
        "verified": True,
    }
    report = _report("construct", args.spec, results, started)
    label = "R" if args.total else "S"
    lines = [
        f"group {args.spec}  H={list(h.elements)}",
        f"{label} = {list(conn.sorted())}  (verified)",
    ]
    _emit(report, args.format, lines)
    return 0


def cmd_verify(args) -> int:
    started = time.perf_counter()
    result = run_suite(args.suite, max_order=args.max_order, seed=args.seed)
    report = _report("verify", None, result.to_json(), started)
    status = "PASS" if result.passed else "FAIL"
    lines = [
        f"suite {result.name}: {status}  checks={result.checks}"
        f" failures={len(result.failures)}  ({result.elapsed:.2f}s)"
    ]
    lines += [f"  FAIL {msg}" for msg in result.failures]
    _emit(report, args.format, lines)
    return 0 if result.passed else 1


def cmd_automorphisms(args) -> int:
    started = time.perf_counter()
    g = parse_group_spec(args.spec)
    bound = _max_order(24)
    sigmas = all_automorphisms(g, max_order=bound)
    rows = []
    for sigma in sigmas:
        row = {
            "sigma": list(sigma.map),
            "power": is_power_automorphism(g, sigma),
        }
        if args.pcp:
            pcp = is_pcp_automorphism(g, sigma, budget=args.budget, seed=args.seed)
            tpcp = is_tpcp_automorphism(g, sigma, budget=args.budget, seed=args.seed)
            row.update(pcp.to_json(args.spec, g))
            row["preserving"] = pcp.preserving
            row["total_preserving"] = tpcp.preserving
        rows.append(row)
    report = _report("automorphisms", args.spec, rows, started)
    lines = [f"group {args.spec}  automorphisms: {len(rows)}"]
    for row in rows:
        extra = ""
        if args.pcp:
            extra = (
                f"  pcp={row['preserving']} tpcp={row['total_preserving']}"
                f" scope={row['scope']}"
            )
            if row.get("counterexample"):
                ce = row["counterexample"]
                extra += f"  counterexample S={ce['S']} C={ce['C']}"
        lines.append(f"  power={str(row['power']):<5} {row['sigma']}{extra}")
    _emit(report, args.format, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleycodes",
        description="Perfect codes in Cayley graphs of finite groups",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("classify", help="classify all subgroups as codes")
    p.add_argument("spec")
    p.add_argument("--subgroup", help="generator expression or index list")
    common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("check", help="run all checks on one (S, C) pair")
    p.add_argument("spec")
    p.add_argument("--conn", required=True)
    p.add_argument("--code", required=True)
    p.add_argument("--total", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("enumerate", help="enumerate all (total) perfect codes")
    p.add_argument("spec")
    p.add_argument("--conn", required=True)
    p.add_argument("--total", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("construct", help="build a verified connection set")
    p.add_argument("spec")
    p.add_argument("--subgroup", required=True)
    p.add_argument("--total", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("automorphisms", help="list automorphisms and PCP status")
    p.add_argument("spec")
    p.add_argument("--pcp", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(fn=cmd_automorphisms)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.fn(args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GroupSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CayleyCodesError as exc:
        # mathematical failures (no construction, failed verification)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
