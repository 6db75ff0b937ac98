"""``cdlat`` command line.

Exit codes: 0 success, 1 a verified claim failed, 2 invalid input,
3 a size guard or the time budget was hit.  Errors print one line on
stderr starting with ``cdlat: error:``.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
import time
from typing import Any, Sequence

from . import __version__
from .cd import cd_lattice, describe_subgroup, report_to_dict
from .constructors import GroupSpec, build_group, spec, spec_from_dict
from .errors import BudgetExceeded, CDLatError, InvalidSpec, SizeGuard
from .group import Group
from .harness import (FAST_SUITES, STRETCH_SUITES, census_row, default_corpus,
                      run_suites, verify_example_sec3, zm_triples)
from .subgroups import Limits

METHODS = {"closure": "closure_family", "oracle": "brute_force"}


class _Fail(Exception):
    """A claim did not verify (exit 1)."""


def _positive(value: str) -> int:
    v = int(value)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _load_spec(args: argparse.Namespace) -> GroupSpec:
    if (args.spec is None) == (args.inline is None):
        raise InvalidSpec("exactly one of --spec FILE or --inline JSON is required")
    try:
        if args.spec is not None:
            with open(args.spec, encoding="utf-8") as fh:
                data = json.load(fh)
        else:
            data = json.loads(args.inline)
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"malformed JSON: {exc.msg} at line {exc.lineno} column {exc.colno}")
    except OSError as exc:
        raise InvalidSpec(f"cannot read spec file: {exc.strerror}")
    return spec_from_dict(data)


def _limits(args: argparse.Namespace) -> Limits:
    return Limits(order_bound=args.order_bound, count_bound=args.count_bound)


# --------------------------------------------------------------------------
# commands

def _group_summary(G: Group, dump_table: bool) -> dict:
    out: dict[str, Any] = {
        "order": G.order,
        "center_order": G.center.order,
        "is_abelian": G.is_abelian,
        "spec": G.spec.to_dict() if G.spec is not None else None,
        "generators": list(G.generators),
        "named": {k: list(v) for k, v in sorted(G.named.items())},
    }
    if G.labels is not None and (dump_table or G.order <= 64):
        out["labels"] = list(G.labels)
    if dump_table:
        if not G.is_dense:
            raise SizeGuard(f"no dense table for a group of order {G.order}")
        out["table"] = G.table.tolist()
    return out


def cmd_construct(args: argparse.Namespace) -> int:
    G = build_group(_load_spec(args))
    summary = _group_summary(G, args.dump_table)
    if args.format == "json":
        sys.stdout.write(_dump(summary))
    else:
        lines = [f"order {summary['order']}", f"center order {summary['center_order']}",
                 f"abelian {str(summary['is_abelian']).lower()}"]
        for i, lab in enumerate(summary.get("labels", [])):
            lines.append(f"{i}: {lab}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def hasse_edges(members) -> list[tuple[int, int]]:
    """Covering pairs (i, j): members[i] < members[j] with nothing strictly between."""
    edges = []
    for i, lo in enumerate(members):
        for j, hi in enumerate(members):
            if lo < hi and not any(lo < mid < hi for mid in members):
                edges.append((i, j))
    return edges


def render_dot(report) -> str:
    lines = ["digraph cd_lattice {", "  rankdir=BT;"]
    for i, H in enumerate(report.members):
        lines.append(f'  n{i} [label="order={H.order}, m={report.max_measure}"];')
    for i, j in hasse_edges(report.members):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_cd(args: argparse.Namespace) -> int:
    G = build_group(_load_spec(args))
    start = time.perf_counter()
    report = cd_lattice(G, METHODS[args.method], _limits(args))
    elapsed = int((time.perf_counter() - start) * 1000)
    if args.format == "dot":
        sys.stdout.write(render_dot(report))
    elif args.format == "text":
        lines = [f"order {G.order}", f"m(G) {report.max_measure}", f"members {len(report.members)}",
                 f"chain {'length ' + str(report.chain_length) if report.is_chain else 'no'}"]
        for H in report.members:
            d = describe_subgroup(G, H, 0)
            lines.append(f"  order={d['order']} generators={d['generators']}")
        bad = report.failed_checks()
        lines.append("property checks " + ("ok" if not bad else "FAILED: " + ", ".join(bad)))
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        out = report_to_dict(G, report, args.element_limit)
        if args.timings:
            out["runtime_ms"] = elapsed
        sys.stdout.write(_dump(out))
    return 0


def _emit_outcomes(outcomes, timings: bool, suites: list[str]) -> int:
    passed = all(o.passed for o in outcomes)
    sys.stdout.write(_dump({"suites": suites, "passed": passed,
                            "outcomes": [o.to_dict(timings) for o in outcomes]}))
    if not passed:
        raise _Fail(", ".join(o.claim_id for o in outcomes if not o.passed))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    suites = args.suite or list(FAST_SUITES)
    outcomes = run_suites(suites, bound=args.bound, threads=args.threads, oracle=not args.no_oracle)
    return _emit_outcomes(outcomes, args.timings, suites)


def cmd_example(args: argparse.Namespace) -> int:
    return _emit_outcomes([verify_example_sec3()], args.timings, ["example-sec3"])


def _scan_rows(family: str, bound: int, limits: Limits) -> list[tuple[str, GroupSpec]]:
    if family == "zm":
        return [(f"ZM({m},{n},{r})", spec("zm", m=m, n=n, r=r)) for m, n, r in zm_triples(bound)]
    if family == "dihedral":
        return [(f"D{k // 2}", spec("dihedral", two_n=k)) for k in range(4, bound + 1, 2)]
    return [(e.name, e.spec) for e in default_corpus()]


def _census(item: tuple[str, GroupSpec, Limits, str]) -> dict:
    return census_row(*item)


def cmd_scan(args: argparse.Namespace) -> int:
    limits = _limits(args)
    items = [(n, s, limits, METHODS[args.method]) for n, s in _scan_rows(args.family, args.bound, limits)]
    if args.threads > 1 and len(items) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(_census, items, chunksize=max(1, len(items) // (args.threads * 4))))
    else:
        rows = [_census(it) for it in items]
    if args.format == "json":
        sys.stdout.write(_dump({"family": args.family, "rows": rows}))
    else:
        out = []
        for r in rows:
            if "skipped" in r:
                out.append(f"{r['name']}\tskipped: {r['skipped']}")
            else:
                chain = str(r["chain_length"]) if r["is_chain"] else "-"
                out.append(f"{r['name']}\torder={r['order']}\tm={r['max_measure']}\t|CD|={r['cd_size']}"
                           f"\tchain={str(r['is_chain']).lower()}\tlength={chain}")
        sys.stdout.write("\n".join(out) + "\n")
    return 0


# --------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdlat", description="Chermak-Delgado lattices of finite groups.")
    parser.add_argument("--version", action="version", version=f"cdlat {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order-bound", type=_positive, default=200, help="largest order for exhaustive subgroup work")
    common.add_argument("--count-bound", type=_positive, default=100_000, help="largest subgroup count")
    common.add_argument("--threads", type=_positive, default=1, help="worker processes")
    common.add_argument("--time-budget", type=float, default=None, metavar="SECONDS",
                        help="abort with exit code 3 after this many seconds")
    common.add_argument("--timings", action="store_true", help="include runtime_ms fields in JSON")
    spec_opts = argparse.ArgumentParser(add_help=False)
    spec_opts.add_argument("--spec", metavar="FILE", help="group spec JSON file")
    spec_opts.add_argument("--inline", metavar="JSON", help="group spec JSON text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common, spec_opts], help="build a group and summarize it")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--dump-table", action="store_true", help="include labels and the Cayley table")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("cd", parents=[common, spec_opts], help="compute CD(G)")
    p.add_argument("--method", choices=tuple(METHODS), default="closure")
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.add_argument("--element-limit", type=int, default=64, help="list elements of members up to this order")
    p.set_defaults(func=cmd_cd)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", action="append", choices=FAST_SUITES + STRETCH_SUITES,
                   help="suite to run (repeatable; default: all fast suites)")
    p.add_argument("--bound", type=_positive, default=200, help="bound on m n for the ZM sweep")
    p.add_argument("--no-oracle", action="store_true", help="skip brute-force cross-checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="census of a family")
    p.add_argument("family", choices=("zm", "dihedral", "corpus"))
    p.add_argument("--bound", type=_positive, default=200, help="bound on the group order")
    p.add_argument("--method", choices=tuple(METHODS), default="closure")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("example-sec3", parents=[common], help="the order 3 * 7^5 Frobenius example")
    p.set_defaults(func=cmd_example)
    return parser


def _diag(kind: str, message: str) -> None:
    sys.stderr.write(f"cdlat: error: {kind}: {' '.join(str(message).split())}\n")


def _on_alarm(signum, frame) -> None:
    raise BudgetExceeded("time budget exhausted")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.time_budget is not None:
        if args.time_budget <= 0:
            _diag("InvalidSpec", "--time-budget must be positive")
            return 2
        signal.signal(signal.SIGALRM, _on_alarm)
        signal.setitimer(signal.ITIMER_REAL, args.time_budget)
    try:
        return args.func(args)
    except _Fail as exc:
        _diag("ClaimFailed", str(exc))
        return 1
    except SizeGuard as exc:
        _diag(exc.kind, str(exc))
        return 3
    except CDLatError as exc:
        _diag(exc.kind, str(exc))
        return 2
    except ValueError as exc:
        _diag("InvalidSpec", str(exc))
        return 2
    finally:
        if args.time_budget is not None:
            signal.setitimer(signal.ITIMER_REAL, 0)


if __name__ == "__main__":
    sys.exit(main())
