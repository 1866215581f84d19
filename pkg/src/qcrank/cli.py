"""Command-line front end.

Exit codes: 0 when every selected check passed, 1 when at least one failed,
2 on a usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import partitions as parts
from .lerch import build_master_lhs
from .products import NAMED, named_product
from .rings import format_scalar
from .series import from_dict
from .verify import (
    UsageError,
    adjudication_summary,
    format_report,
    overall_passed,
    registry,
    reports_to_json,
    run_suite,
    select,
    tags,
)

ORDER_LIMIT = 200
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class CliConfig:
    command: str
    suite_or_ids: List[str]
    order: Optional[int] = None
    format: str = "text"
    parallelism: int = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits with status 2 already; this only keeps the message terse
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qcrank", description="Exact q-series verification of crank and Lerch-sum identities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--suite", help="tag or check id (default: all)")
    v.add_argument("--id", action="append", default=[], dest="ids", help="check id; may be repeated")
    _order_args(v)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes (default: all cores)")
    v.add_argument("--min-exp", type=int, default=None, help="override the first compared exponent")
    v.add_argument("--list", action="store_true", help="list the selected checks instead of running them")

    s = sub.add_parser("series", help="print the expansion of a named series")
    s.add_argument("name", help="a product name (" + ", ".join(NAMED[:11]) + ", P25(i), P49(i)), master5, master7 or p")
    _order_args(s, default=20)
    s.add_argument("--format", choices=("text", "json"), default="text")

    pt = sub.add_parser("partitions", help="partition statistics by enumeration")
    psub = pt.add_subparsers(dest="action", required=True, parser_class=_Parser)
    st = psub.add_parser("stats", help="list partitions of n with rank and crank, and tally a statistic mod k")
    st.add_argument("--n", type=int, required=True)
    st.add_argument("--k", type=int, default=5)
    st.add_argument("--stat", default="crank", help="rank | parts | crank (or N, NT, M_omega)")
    st.add_argument("--format", choices=("text", "json"), default="text")
    ct = psub.add_parser("count", help="p(n)")
    ct.add_argument("--n", type=int, required=True)

    ls = sub.add_parser("list", help="catalogue of checks")
    ls.add_argument("--suite", help="restrict to a tag")
    ls.add_argument("--format", choices=("text", "json"), default="text")
    return p


def _order_args(p: argparse.ArgumentParser, default: Optional[int] = None) -> None:
    p.add_argument("--order", type=int, default=default, help=f"truncation order (at most {ORDER_LIMIT} unless --allow-large-order)")
    p.add_argument("--allow-large-order", action="store_true", help="lift the order safety limit")


def _check_order(args) -> None:
    if args.order is None:
        return
    if args.order < 1:
        raise UsageError("--order must be at least 1")
    if args.order > ORDER_LIMIT and not args.allow_large_order:
        raise UsageError(f"--order {args.order} exceeds the limit {ORDER_LIMIT}; pass --allow-large-order to proceed")


# ------------------------------------------------------------------ commands
def _selector(args):
    if args.ids and args.suite:
        raise UsageError("use either --suite or --id, not both")
    if args.ids:
        return args.ids
    return args.suite


def config_from_args(args) -> CliConfig:
    """Validated run settings for ``verify``."""
    _check_order(args)
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    selector = _selector(args)
    ids = [selector] if isinstance(selector, str) else list(selector or [])
    return CliConfig("verify", ids, args.order, args.format, args.jobs)


def cmd_verify(args, out) -> int:
    cfg = config_from_args(args)
    selector = _selector(args)
    if args.list:
        return _print_catalogue(select(selector), cfg.format, out)
    reports = run_suite(selector, order=cfg.order, jobs=cfg.parallelism, min_exp=args.min_exp)
    if cfg.format == "json":
        out.write(reports_to_json(reports) + "\n")
    else:
        for r in reports:
            out.write(format_report(r) + "\n")
        for group, winners in adjudication_summary(reports).items():
            verdict = ", ".join(winners) if winners else "none"
            out.write(f"adjudication {group}: verified by {verdict}\n")
        failed = sum(1 for r in reports if not r.passed)
        out.write(f"{len(reports) - failed}/{len(reports)} checks passed\n")
    return EXIT_OK if overall_passed(reports) else EXIT_FAIL


def _series_by_name(name: str, order: int):
    if name == "master5":
        return build_master_lhs(5, order)
    if name == "master7":
        return build_master_lhs(7, order)
    if name == "p":
        return from_dict({n: parts.p_count(n) for n in range(order + 1)}, order)
    try:
        return named_product(name, order)
    except (KeyError, ValueError):
        raise UsageError(f"unknown series {name!r}") from None


def cmd_series(args, out) -> int:
    _check_order(args)
    s = _series_by_name(args.name, args.order)
    if args.format == "json":
        body = {"name": args.name, "lower": s.lower, "order": s.order,
                "coefficients": [format_scalar(c) for c in s.coefs]}
        out.write(json.dumps(body) + "\n")
    else:
        out.write(s.terms_str() + "\n")
    return EXIT_OK


def _plus(lam) -> str:
    return "+".join(map(str, lam)) if lam else "(empty)"


def cmd_partitions(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.action == "count":
        out.write(f"p({args.n}) = {parts.p_count(args.n)}\n")
        return EXIT_OK
    try:
        table = parts.stats(args.n, args.k, args.stat)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [(lam, parts.rank(lam), parts.crank(lam), len(lam), parts.ones(lam))
            for lam in parts.enumerate_partitions(args.n)]
    if args.format == "json":
        body = {
            "n": args.n, "k": args.k, "stat": table.which,
            "partitions": [{"parts": list(l), "rank": r, "crank": c, "parts_count": np_, "ones": w}
                           for l, r, c, np_, w in rows],
            "tally": {str(r): table[r] for r in range(args.k)},
        }
        out.write(json.dumps(body, indent=2) + "\n")
        return EXIT_OK
    width = max([len("partition")] + [len(_plus(l)) for l, *_ in rows])
    out.write(f"{'partition':<{width}}  rank  crank  parts  ones\n")
    for lam, r, c, np_, w in rows:
        out.write(f"{_plus(lam):<{width}}  {r:>4}  {c:>5}  {np_:>5}  {w:>4}\n")
    tally = "  ".join(f"{r}:{table[r]}" for r in range(args.k))
    out.write(f"{table.which} mod {args.k}: {tally}\n")
    return EXIT_OK


def _print_catalogue(checks, fmt: str, out) -> int:
    if fmt == "json":
        body = [{"id": c.id, "anchor": c.anchor, "description": c.description, "tags": list(c.tags),
                 "mode": str(c.mode), "order": c.order, "min_exp": c.min_exp, "unproven": c.unproven,
                 "role": c.role, "group": c.group} for c in checks]
        out.write(json.dumps(body, indent=2) + "\n")
        return EXIT_OK
    for c in checks:
        flags = []
        if c.unproven:
            flags.append("unproven")
        if c.role != "claim":
            flags.append(c.role + (f":{c.group}" if c.group else ""))
        note = f" [{', '.join(flags)}]" if flags else ""
        out.write(f"{c.id}{note}\n    anchor: {c.anchor}\n    {c.description}\n")
    return EXIT_OK


def cmd_list(args, out) -> int:
    checks = select(args.suite) if args.suite else registry()
    return _print_catalogue(checks, args.format, out)


COMMANDS = {"verify": cmd_verify, "series": cmd_series, "partitions": cmd_partitions, "list": cmd_list}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"qcrank: {exc}", file=sys.stderr)
        if args.command in ("verify", "list"):
            print(f"known suites: {', '.join(tags())}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
