"""
Command-Line Entry Point

Subcommands for class listings, class squares, trace sets, the orders table,
generation certificates, factorizations and verification reports.

Design Considerations:
- Results go to standard output, diagnostics to standard error
- Output depends on the flags only; settings change budgets and verbosity
- Exit codes: 0 success, 1 verification mismatch, 2 malformed input,
  3 construction defect
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from dotenv import load_dotenv

from src.classification.orders import orders_table_upto
from src.classification.traces import trace_set
from src.config.settings import PSL2Settings, get_settings
from src.fields.finite_field import prime_power
from src.groups.models import ClassId
from src.groups.psl2 import GroupCtx, group_for_order
from src.oracle.enumeration import class_square_brute, enumerate_group
from src.oracle.verification import verify_all
from src.products.generation import (
    factorization_absence_reason,
    generating_pair_in_class,
    generating_triple_in_class,
    pair_absence_reason,
    product_of_conjugate_generators,
    triple_absence_reason,
)
from src.products.models import GenCertificate
from src.products.squares import class_square_closed, expand_set_descr, total_size
from src.utils.errors import GroupError
from src.utils.logging_utils import configure_safe_logging

from .errors import EXIT_DEFECT, EXIT_MISMATCH, EXIT_OK, error_response, exit_code_for, render_error
from .formatters import FORMATS, CommandOutput, render
from .selectors import resolve_selector

logger = logging.getLogger("psl2_cli")

CLASS_COLUMNS = ["selector", "kind", "order", "size"]
ROLES = ("x", "y", "z")


# Helpers

def _class_row(ctx: GroupCtx, cid: ClassId) -> Dict[str, object]:
    return {
        "selector": cid.label,
        "kind": cid.kind.value,
        "order": ctx.class_order(cid),
        "size": ctx.class_size(cid),
    }


def _parse_matrix(text: str) -> List[int]:
    parts = [part.strip() for part in text.split(",")]
    try:
        entries = [int(part) for part in parts]
    except ValueError:
        raise GroupError(f"matrix {text!r} must be four comma-separated integers") from None
    if len(entries) != 4:
        raise GroupError(f"matrix {text!r} must have exactly four entries", {"entries": entries})
    return entries


def _certificate_output(
    command: str,
    ctx: GroupCtx,
    label: str,
    cert: Optional[GenCertificate],
    reason: Optional[str],
) -> CommandOutput:
    if cert is None:
        return CommandOutput(
            command=command,
            q=ctx.q,
            header=ctx.field.describe(),
            result={"class": label, "present": False, "reason": reason},
            columns=["class", "present", "reason"],
            rows=[{"class": label, "present": False, "reason": reason}],
        )
    rows = [{"role": role, "matrix": entries} for role, entries in zip(ROLES, cert.elements)]
    if cert.target is not None:
        rows.append({"role": "target", "matrix": cert.target})
    return CommandOutput(
        command=command,
        q=ctx.q,
        header=ctx.field.describe(),
        result={"class": label, "present": True, "certificate": cert.model_dump(mode="json")},
        columns=["role", "matrix"],
        rows=rows,
    )


# Commands

def cmd_classes(args: argparse.Namespace, settings: PSL2Settings) -> CommandOutput:
    ctx = group_for_order(args.q, settings)
    rows = []
    for cid, _ in ctx.all_class_ids():
        row = _class_row(ctx, cid)
        row["representative"] = ctx.representative(cid).as_list()
        rows.append(row)
    return CommandOutput(
        command="classes",
        q=ctx.q,
        header=ctx.field.describe(),
        result={"group_order": ctx.group_order, "classes": rows},
        columns=["selector", "kind", "representative", "order", "size"],
        rows=rows,
    )


def cmd_square(args: argparse.Namespace, settings: PSL2Settings) -> CommandOutput:
    ctx = group_for_order(args.q, settings)
    cid = resolve_selector(ctx, args.selector)
    result: Dict[str, object] = {"class": cid.label}
    if args.closed_form:
        descr = class_square_closed(ctx, cid)
        ids = expand_set_descr(ctx, descr)
        result.update(mode="closed-form", closed_form=descr.value)
    else:
        ids = class_square_brute(enumerate_group(ctx), cid)
        result["mode"] = "brute"
    rows = [_class_row(ctx, c) for c in sorted(ids, key=ClassId.sort_key)]
    result.update(classes=rows, element_total=total_size(ctx, ids))
    return CommandOutput(
        command="square",
        q=ctx.q,
        header=ctx.field.describe(),
        result=result,
        columns=CLASS_COLUMNS,
        rows=rows,
    )


def cmd_traces(args: argparse.Namespace, settings: PSL2Settings) -> CommandOutput:
    ctx = group_for_order(args.q, settings)
    traces = sorted(trace_set(ctx, args.n))
    return CommandOutput(
        command="traces",
        q=ctx.q,
        header=ctx.field.describe(),
        result={"n": args.n, "traces": traces},
        columns=["trace"],
        rows=[{"trace": t} for t in traces],
    )


def cmd_table1(args: argparse.Namespace, settings: PSL2Settings) -> CommandOutput:
    table = orders_table_upto(args.qmax)
    rows = [
        {
            "q": row.q,
            "unipotent": row.unipotent_order,
            "q-minimal good": row.minimal_good,
            "q-minimal not good": row.minimal_not_good,
        }
        for row in table
    ]
    return CommandOutput(
        command="table1",
        q=None,
        header=None,
        result=[row.model_dump(mode="json") for row in table],
        columns=["q", "unipotent", "q-minimal good", "q-minimal not good"],
        rows=rows,
    )


def cmd_gen_pair(args: argparse.Namespace, settings: PSL2Settings) -> CommandOutput:
    ctx = group_for_order(args.q, settings)
    cid = resolve_selector(ctx, args.selector)
    reason = pair_absence_reason(ctx, cid)
    cert = None if reason else generating_pair_in_class(ctx, cid, args.seed)
    return _certificate_output("gen-pair", ctx, cid.label, cert, reason)


def cmd_gen_triple(args: argparse.Namespace, settings: PSL2Settings) -> CommandOutput:
    ctx = group_for_order(args.q, settings)
    cid = resolve_selector(ctx, args.selector)
    reason = triple_absence_reason(ctx, cid)
    cert = None if reason else generating_triple_in_class(ctx, cid, args.seed)
    return _certificate_output("gen-triple", ctx, cid.label, cert, reason)


def cmd_factor(args: argparse.Namespace, settings: PSL2Settings) -> CommandOutput:
    ctx = group_for_order(args.q, settings)
    z = ctx.elem(*_parse_matrix(args.elem))
    reason = factorization_absence_reason(ctx, z, args.unipotent_factors)
    cert = None if reason else product_of_conjugate_generators(ctx, z, args.unipotent_factors)
    return _certificate_output("factor", ctx, ctx.class_id(z).label, cert, reason)


def cmd_verify(args: argparse.Namespace, settings: PSL2Settings) -> CommandOutput:
    if args.q is not None:
        qs = [args.q]
    else:
        qs = []
        for q in range(2, args.all_q_upto + 1):
            try:
                prime_power(q)
            except ValueError:
                continue
            qs.append(q)

    reports = [verify_all(q, args.seed, settings) for q in qs]
    rows = [
        {
            "q": report.q,
            "all_match": report.all_match,
            "table1_match": report.table1_match,
            "epsilon_observed": report.epsilon_observed,
            "mismatches": len(report.mismatches),
        }
        for report in reports
    ]
    single = args.q is not None
    return CommandOutput(
        command="verify",
        q=args.q,
        header=group_for_order(args.q, settings).field.describe() if single else None,
        result=reports[0].model_dump(mode="json") if single else [r.model_dump(mode="json") for r in reports],
        columns=["q", "all_match", "table1_match", "epsilon_observed", "mismatches"],
        rows=rows,
        exit_code=EXIT_OK if all(r.all_match for r in reports) else EXIT_MISMATCH,
    )


COMMANDS: Dict[str, Callable[[argparse.Namespace, PSL2Settings], CommandOutput]] = {
    "classes": cmd_classes,
    "square": cmd_square,
    "traces": cmd_traces,
    "table1": cmd_table1,
    "gen-pair": cmd_gen_pair,
    "gen-triple": cmd_gen_triple,
    "factor": cmd_factor,
    "verify": cmd_verify,
}


# Parser

def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per entry of COMMANDS."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=FORMATS,
        default="table",
        help="Output format (default: table)"
    )
    common.add_argument(
        "--out",
        type=str,
        default=None,
        help="Also write the output to this file"
    )

    parser = argparse.ArgumentParser(
        prog="psl2-classes",
        description="Conjugacy classes, class squares and generation certificates of PSL2(q)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", parents=[common], help="List every conjugacy class")
    p.add_argument("--q", type=int, required=True, help="Field size (a prime power)")

    p = sub.add_parser("square", parents=[common], help="Classes met by the square of a class")
    p.add_argument("--q", type=int, required=True, help="Field size (a prime power)")
    p.add_argument("--class", dest="selector", required=True, help="Class selector, e.g. unip:sq or ord:9")
    p.add_argument("--closed-form", action="store_true", help="Use the closed form instead of enumeration")

    p = sub.add_parser("traces", parents=[common], help="Traces of the elements of a given order")
    p.add_argument("--q", type=int, required=True, help="Field size (a prime power)")
    p.add_argument("--n", type=int, required=True, help="Element order")

    p = sub.add_parser("table1", parents=[common], help="q-minimal orders split by q-goodness")
    p.add_argument("--qmax", type=int, default=29, help="Largest q to list (default: 29)")

    for name, help_text in (("gen-pair", "Generating pair inside a class"),
                            ("gen-triple", "Generating triple with product 1 inside a class")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--q", type=int, required=True, help="Field size (a prime power)")
        p.add_argument("--class", dest="selector", required=True, help="Class selector")
        p.add_argument("--seed", type=int, default=None, help="Seed for the randomized fallback")

    p = sub.add_parser("factor", parents=[common], help="Write an element as a product of conjugate generators")
    p.add_argument("--q", type=int, required=True, help="Field size (a prime power)")
    p.add_argument("--elem", required=True, help="Matrix entries a,b,c,d as enc integers")
    p.add_argument("--unipotent-factors", action="store_true", help="Require unipotent factors")

    p = sub.add_parser("verify", parents=[common], help="Reconcile closed forms with the brute-force oracle")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--q", type=int, help="Field size (a prime power)")
    target.add_argument("--all-q-upto", type=int, help="Verify every prime power up to this bound")
    p.add_argument("--seed", type=int, default=None, help="Seed for the randomized fallback")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand.

    Args:
        argv: Arguments without the program name, defaults to sys.argv[1:]

    Returns:
        Process exit code
    """
    load_dotenv()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse has already written usage or help
        return int(exc.code or 0)
    as_json = args.format == "json"

    try:
        settings = get_settings()
        configure_safe_logging(settings.LOG_LEVEL)
        output = COMMANDS[args.command](args, settings)
    except Exception as exc:
        code = exit_code_for(exc)
        if code == EXIT_DEFECT:
            logger.error(f"{args.command} failed: {exc}", exc_info=True)
        else:
            logger.debug(f"{args.command} rejected its input: {exc}")
        sys.stderr.write(render_error(error_response(exc), as_json))
        return code

    text = render(output, args.format)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {args.command} output to {args.out}")
    return output.exit_code


if __name__ == "__main__":
    sys.exit(main())
