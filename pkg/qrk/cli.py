"""Command-line entry point.

Exit codes: 0 when everything passes, 1 on a verification failure or an
evaluation error, 2 on usage or parse errors. Results go to stdout, diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from qrk.catalog.registry import describe_records, get_record, verify, verify_all
from qrk.config import get_settings
from qrk.core.partitions import prime_partition_scan, ramanujan_mod5_check, ramanujan_mod7_check
from qrk.core.qnt import chi_poly, q_euler_check, q_fermat_check, q_wilson_check
from qrk.dsl.evaluator import eval_series
from qrk.errors import DslSyntaxError, PreconditionError, QrkError, UnknownIdentityError
from qrk.schemas.verdict import Verdict, VerificationMode

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qrk", description="Exact q-series identity kit.")
    sub = parser.add_subparsers(dest="command", required=True)

    listing = sub.add_parser("list", help="list registry identities")
    listing.add_argument("--json", action="store_true")

    one = sub.add_parser("verify", help="verify one identity")
    one.add_argument("identity")
    one.add_argument("--order", type=int, help="size parameter (T or N) of the record")
    one.add_argument("--q-order", type=int, help="q-expansion order for q-series records")
    one.add_argument("--json", action="store_true")

    every = sub.add_parser("verify-all", help="verify every identity")
    every.add_argument("--json", action="store_true")
    every.add_argument("--workers", type=int)

    qnt = sub.add_parser("qnt", help="quantum number theory checks")
    qnt_sub = qnt.add_subparsers(dest="qnt_command", required=True)
    fermat = qnt_sub.add_parser("fermat")
    fermat.add_argument("--p", type=int, required=True)
    fermat.add_argument("--a-max", type=int, required=True)
    wilson = qnt_sub.add_parser("wilson")
    wilson.add_argument("--p", type=int, required=True)
    euler = qnt_sub.add_parser("euler")
    euler.add_argument("--m", type=int, required=True)
    euler.add_argument("--a", type=int, required=True)
    chi = qnt_sub.add_parser("chi")
    chi.add_argument("--p", type=int, required=True)
    chi.add_argument("--emit", action="store_true", help="print only the polynomial")
    for command in (fermat, wilson, euler):
        command.add_argument("--json", action="store_true")

    partition = sub.add_parser("partition", help="partition identities")
    partition.add_argument("--check5", action="store_true")
    partition.add_argument("--check7", action="store_true")
    partition.add_argument("--scan-prime", type=int, metavar="T")
    partition.add_argument("--order", type=int)
    partition.add_argument("--json", action="store_true")

    evaluate = sub.add_parser("eval", help="expand an expression as an x-series")
    evaluate.add_argument("expression")
    evaluate.add_argument("--order", type=int)
    evaluate.add_argument("--q-order", type=int)
    return parser


def _emit(verdicts: Sequence[Verdict], as_json: bool) -> int:
    for verdict in verdicts:
        if as_json:
            print(verdict.model_dump_json())
        else:
            failure = "" if verdict.first_failure is None else f" at {verdict.first_failure}"
            print(f"{verdict.id}: {verdict.status.value}{failure}")
            for key, value in verdict.witness.items():
                print(f"  {key} = {value}")
    return 0 if all(v.passed for v in verdicts) else 1


# ── subcommands ──


def _cmd_list(args: argparse.Namespace) -> int:
    for record in describe_records():
        if args.json:
            print(record.model_dump_json())
        else:
            print(f"{record.id}\t{record.mode.value}\t{record.summary}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    record = get_record(args.identity)
    overrides: dict[str, int] = {}
    if args.order is not None:
        overrides[record.size] = args.order
    if args.q_order is not None:
        if record.mode is VerificationMode.Q_SERIES:
            overrides["T"] = args.q_order
        else:
            logger.info("--q-order ignored for %s records", record.mode.value)
    return _emit([verify(args.identity, overrides)], args.json)


def _cmd_verify_all(args: argparse.Namespace) -> int:
    return _emit(verify_all(args.workers), args.json)


def _cmd_qnt(args: argparse.Namespace) -> int:
    if args.qnt_command == "fermat":
        verdicts = [q_fermat_check(a, args.p) for a in range(1, args.a_max + 1)]
        return _emit(verdicts, args.json)
    if args.qnt_command == "wilson":
        return _emit([q_wilson_check(args.p)], args.json)
    if args.qnt_command == "euler":
        return _emit([q_euler_check(args.a, args.m)], args.json)
    chi = chi_poly(args.p)
    if args.emit:
        print(chi.coefficients)
    else:
        print(f"chi_{chi.p}(y) = {chi.coefficients}  (degree {chi.degree})")
    return 0


def _cmd_partition(args: argparse.Namespace) -> int:
    order = args.order if args.order is not None else get_settings().default_order
    verdicts: list[Verdict] = []
    if args.check5:
        verdicts.append(ramanujan_mod5_check(order))
    if args.check7:
        verdicts.append(ramanujan_mod7_check(order))
    status = _emit(verdicts, args.json)
    if args.scan_prime is not None:
        found = prime_partition_scan(args.scan_prime)
        if found is None:
            print(f"prime partitions agree for 2 <= n <= {args.scan_prime}")
        else:
            n, c, d = found
            print(f"prime partitions: first discrepancy at n={n}: c={c}, d={d}")
    return status


def _cmd_eval(args: argparse.Namespace) -> int:
    print(eval_series(args.expression, args.order, args.q_order))
    return 0


_COMMANDS = {
    "list": _cmd_list,
    "verify": _cmd_verify,
    "verify-all": _cmd_verify_all,
    "qnt": _cmd_qnt,
    "partition": _cmd_partition,
    "eval": _cmd_eval,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` and dispatch; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        return _COMMANDS[args.command](args)
    except (UnknownIdentityError, DslSyntaxError, PreconditionError) as e:
        print(f"qrk: {e}", file=sys.stderr)
        return 2
    except QrkError as e:
        logger.error("%s failed: %s", args.command, e)
        print(f"qrk: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


def main() -> None:
    settings = get_settings()
    logging.basicConfig(
        level=settings.log_level.upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    sys.exit(run())
