"""twistalg command line: verify suites, expand expressions, print relation tables."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import catalog as cat
from . import rewrite
from .parse import ParseError, parse_expression
from .report import CheckResult, build_report, execute, format_text

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

ALGEBRAS = ("c4", "s7", "forms", "sl2h", "sl2h-det1", "sl2h@c4", "sl2h@forms")


def _legs(algebra: str):
    from . import hopf

    if algebra in ("c4", "s7"):
        legs = (cat.c4(),)
    elif algebra == "forms":
        legs = (cat.forms(),)
    elif algebra in ("sl2h", "sl2h-det1"):
        legs = (cat.sl2h(),)
    elif algebra == "sl2h@c4":
        legs = (cat.sl2h(), cat.c4())
    elif algebra == "sl2h@forms":
        legs = (cat.sl2h(), cat.forms())
    else:
        raise KeyError(algebra)
    systems = {"s7": cat.sphere_system, "sl2h-det1": hopf.det1_system}
    return legs, systems.get(algebra)


def _init_worker(limit: int) -> None:
    rewrite.set_completion_limit(limit)


def _run_one(suite: str, check_id: str) -> CheckResult:
    from .suites import find

    return execute(find(suite, check_id))


def run_suite(suite: str, parallelism: int = 1, completion_limit: Optional[int] = None) -> list[CheckResult]:
    from .suites import checks

    saved = rewrite.DEFAULT_COMPLETION_LIMIT
    if completion_limit is not None:
        rewrite.set_completion_limit(completion_limit)
    try:
        todo = checks(suite)
        if parallelism <= 1:
            return [execute(c) for c in todo]
        limit = rewrite.DEFAULT_COMPLETION_LIMIT
        with ProcessPoolExecutor(max_workers=parallelism, initializer=_init_worker, initargs=(limit,)) as pool:
            futures = [pool.submit(_run_one, suite, c.id) for c in todo]
            return [f.result() for f in futures]
    finally:
        rewrite.set_completion_limit(saved)


def cmd_verify(args) -> int:
    from .suites import UnknownSuite, suite_names

    if args.suite not in suite_names():
        print(f"unknown suite {args.suite!r}; choose from {', '.join(suite_names())}", file=sys.stderr)
        return EXIT_USAGE
    try:
        results = run_suite(args.suite, args.parallelism, args.completion_limit)
    except UnknownSuite:
        return EXIT_USAGE
    report = build_report(args.suite, results, timing=not args.no_timing)
    text = json.dumps(report, indent=2, sort_keys=True) + "\n" if args.format == "json" else format_text(report)
    _emit(text, args.out)
    if any(r.metrics.get("limit_exceeded") for r in results):
        return EXIT_LIMIT
    return EXIT_FAIL if report["summary"]["fail"] else EXIT_PASS


def cmd_expand(args) -> int:
    legs, rs = _legs(args.algebra)
    try:
        f = parse_expression(args.expr, legs)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if rs is not None:
        f = rs().reduce(f)
    out = f.to_text() + "\n"
    if args.theta is not None:
        out += f.to_text(theta=args.theta) + "\n"
    _emit(out, args.out)
    return EXIT_PASS


def cmd_table(args) -> int:
    pres = {"c4": cat.c4, "forms": cat.forms, "sl2h": cat.sl2h}[args.algebra]()
    try:
        _emit(cat.format_relation_table(pres, args.format), args.out)
    except OSError as e:
        print(f"cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_PASS


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twistalg", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--out")
    v.add_argument("--parallelism", type=int, default=1)
    v.add_argument("--completion-limit", type=int)
    v.add_argument("--no-timing", action="store_true", help="omit wall-clock metrics for byte-stable output")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("expand", help="print the normal form of an expression")
    e.add_argument("--algebra", choices=ALGEBRAS, default="c4")
    e.add_argument("--theta", type=float, help="also print coefficients at mu = exp(i pi theta)")
    e.add_argument("--out")
    e.add_argument("expr")
    e.set_defaults(func=cmd_expand)

    t = sub.add_parser("table", help="print the pairwise relation table")
    t.add_argument("--algebra", choices=("c4", "forms", "sl2h"), default="sl2h")
    t.add_argument("--format", choices=("tsv", "text"), default="tsv")
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS
    if getattr(args, "parallelism", 1) < 1:
        print("--parallelism must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "completion_limit", None) is not None and args.completion_limit < 0:
        print("--completion-limit must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
