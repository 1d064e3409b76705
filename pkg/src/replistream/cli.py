"""Command-line front end.

Exit codes: 0 success / no violation, 1 violation found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import audit as audit_mod
from .controls import CONTROLS
from .domain import DomainSpec, InputError, Sequence, load_domain
from .evaluators import DESCRIPTIONS, KINDS, evaluator_by_name
from .lifting import STRATEGIES, LiftedComparator, load_table

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="replistream",
                     description="Compare finite utility streams by replication and audit comparators.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    src = common.add_argument_group("domain and comparator")
    src.add_argument("--domain", metavar="FILE", help="domain JSON file")
    src.add_argument("--elements", metavar="SPEC", help='inline domain, e.g. "a:0,b:1,c:2"')
    src.add_argument("--evaluator", default=None, metavar="NAME",
                     help=f"one of {', '.join(KINDS)}; discounted_mean takes :num/den (default mean)")
    src.add_argument("--table", metavar="FILE", help="table comparator JSON file")
    src.add_argument("--control", choices=sorted(CONTROLS), help="built-in negative-control table")
    src.add_argument("--strategy", choices=STRATEGIES, default="lcm")
    out = common.add_argument_group("output")
    out.add_argument("--format", choices=("text", "json"), default="text")
    out.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")

    bound = _Parser(add_help=False)
    grp = bound.add_argument_group("bound")
    grp.add_argument("--max-len", type=_positive_int, default=3)
    grp.add_argument("--closure-len", type=_positive_int, default=None,
                     help="longest formed sequence (default 4*max-len)")
    grp.add_argument("--workers", type=_positive_int, default=None,
                     help="worker processes (default: machine parallelism)")
    grp.add_argument("--timing", action="store_true", help="include per-check timings")

    p = sub.add_parser("compare", parents=[common], help="compare two sequences")
    p.add_argument("left", help='sequence literal, e.g. "a,b"')
    p.add_argument("right")

    p = sub.add_parser("audit", parents=[common, bound], help="audit a comparator")
    p.add_argument("--checks", default="all", help="comma-separated check ids (default all)")

    p = sub.add_parser("search", parents=[common, bound], help="find the first witness for one check")
    p.add_argument("check", help="check id, e.g. A2_2")

    p = sub.add_parser("list-evaluators", help="list evaluators, controls and check ids")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", metavar="FILE")
    return parser


def _resolve(args) -> tuple[DomainSpec, LiftedComparator]:
    chosen = [x for x in (args.evaluator, args.table, args.control) if x is not None]
    if len(chosen) > 1:
        raise InputError("give at most one of --evaluator, --table, --control")
    if args.domain and args.elements:
        raise InputError("give only one of --domain and --elements")
    domain = None
    if args.domain:
        domain = load_domain(args.domain)
    elif args.elements:
        domain = DomainSpec.parse_inline(args.elements)

    if args.table:
        base = load_table(args.table, evaluator_by_name)
        if domain is not None and domain != base.domain:
            raise InputError("--domain differs from the domain embedded in the table")
        domain = base.domain
    else:
        if domain is None:
            raise InputError("a domain is required: pass --domain FILE or --elements SPEC")
        if args.control:
            base = CONTROLS[args.control](domain)
        else:
            base = evaluator_by_name(args.evaluator or "mean", domain)
    return domain, LiftedComparator(base, args.strategy)


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _bound(args, domain) -> audit_mod.UniverseBound:
    return audit_mod.UniverseBound(domain, args.max_len, args.closure_len)


def cmd_compare(args) -> int:
    domain, lifted = _resolve(args)
    s = Sequence.parse(domain, args.left)
    t = Sequence.parse(domain, args.right)
    cert = lifted.certificate(s, t)
    if args.format == "json":
        _emit(args, json.dumps(cert.to_json(), indent=2, ensure_ascii=False) + "\n")
    else:
        _emit(args, cert.render_text() + "\n")
    return EXIT_OK


def _workers(args) -> int:
    return args.workers if args.workers is not None else audit_mod.default_workers()


def cmd_audit(args) -> int:
    domain, lifted = _resolve(args)
    checks = audit_mod.parse_checks(args.checks)
    report = audit_mod.run_audit(lifted, _bound(args, domain), checks,
                                 workers=_workers(args), timing=args.timing)
    _emit(args, report.dumps() if args.format == "json" else report.render_text())
    return EXIT_VIOLATION if report.violated else EXIT_OK


def cmd_search(args) -> int:
    domain, lifted = _resolve(args)
    check_id = audit_mod.parse_checks(args.check)
    if len(check_id) != 1:
        raise InputError("search takes exactly one check id")
    bound = _bound(args, domain)
    report = audit_mod.run_audit(lifted, bound, check_id, workers=_workers(args), timing=args.timing)
    result = report.checks[0]
    if args.format == "json":
        data = {"comparator": lifted.name, "strategy": lifted.strategy, "bound": bound.to_json(),
                "check": result.id, "status": result.status, "tested": result.tested,
                "witness": result.witness}
        if result.reason is not None:
            data["reason"] = result.reason
        if args.timing:
            data["seconds"] = round(result.seconds, 6)
        _emit(args, json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    elif result.witness is not None:
        _emit(args, f"{result.id} witness: {audit_mod.format_witness(result.witness)}\n")
    elif result.status == audit_mod.SKIPPED:
        _emit(args, f"{result.id} skipped: {result.reason}\n")
    else:
        _emit(args, f"{result.id}: none within bound ({result.tested} instances)\n")
    return EXIT_VIOLATION if result.witness is not None else EXIT_OK


def cmd_list(args) -> int:
    if args.format == "json":
        data = {"evaluators": [{"name": k, "description": DESCRIPTIONS[k]} for k in KINDS],
                "controls": sorted(CONTROLS),
                "checks": [{"id": c, "clause": audit_mod.CLAUSES[c]} for c in audit_mod.CHECK_IDS]}
        _emit(args, json.dumps(data, indent=2) + "\n")
        return EXIT_OK
    lines = ["evaluators:"]
    lines += [f"  {k:<16} {DESCRIPTIONS[k]}" for k in KINDS]
    lines += ["controls (--control):"] + [f"  {c}" for c in sorted(CONTROLS)]
    lines += ["checks:"] + [f"  {c:<27} {audit_mod.CLAUSES[c]}" for c in audit_mod.CHECK_IDS]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


COMMANDS = {"compare": cmd_compare, "audit": cmd_audit, "search": cmd_search,
            "list-evaluators": cmd_list}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"replistream: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"replistream: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
