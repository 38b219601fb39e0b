"""Command-line front end.

Exit status: 0 on success (trivially-zero answers included), 1 when a
crosscheck finds unequal totals, 2 on invalid input, 3 on an unsupported
configuration.
"""

from __future__ import annotations

import argparse
import io
import logging
import os
import sys
from typing import Optional, Sequence

from .errors import InvalidInput, UnsupportedConfiguration
from .heegner import HeegnerInput, Level, find_class, h_classes, validate
from .intersect import crosscheck, explicit_pair, explicit_total, repnum_total
from .report import ReportDocument, dumps, loglinear_to_json, render_table, round15

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_UNSUPPORTED = 0, 1, 2, 3
LOG_ENV = "SHIMINT_LOG_LEVEL"


def _parse_h(text: str) -> int:
    t = text.strip().lstrip("±+")
    t = t.split("(")[0].strip()
    try:
        return int(t)
    except ValueError:
        raise InvalidInput(f"cannot parse h-class {text!r}") from None


def _add_input_args(p: argparse.ArgumentParser, with_m: bool = True) -> None:
    p.add_argument("--d1", type=int, required=True, help="first discriminant (negative)")
    p.add_argument("--d2", type=int, required=True, help="second discriminant (negative)")
    p.add_argument("--nplus", type=int, default=1)
    p.add_argument("--nminus", type=int, default=1)
    if with_m:
        p.add_argument("--m", type=int, default=None, help="level-m structure; omit to normalize eta to 1")
    p.add_argument("--format", choices=("table", "json"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shimint",
        description="Exact intersection numbers of Heegner divisors on Shimura curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("explicit", help="sum of L'(0) over n")
    _add_input_args(p)
    p.add_argument("--h", dest="h", default=None, help="restrict to one class ±h (mod 2N)")

    p = sub.add_parser("repnum", help="prime-by-prime sum of genus weight times local multiplicity")
    _add_input_args(p)
    p.add_argument("--genus-source", choices=("local", "lattice"), default="local")

    p = sub.add_parser("crosscheck", help="compare all available methods exactly")
    _add_input_args(p)

    p = sub.add_parser("h-classes", help="list the classes ±h mod 2N")
    _add_input_args(p, with_m=False)

    p = sub.add_parser("validate", help="check input admissibility")
    _add_input_args(p)
    return parser


def _input(args) -> HeegnerInput:
    return HeegnerInput(args.d1, args.d2, Level(args.nplus, args.nminus), getattr(args, "m", None))


def _emit_report(report, fmt: str, out) -> None:
    doc = ReportDocument.from_report(report)
    out.write(doc.to_json() if fmt == "json" else render_table(doc))


def _run(args, out) -> int:
    inp = _input(args)
    if args.command == "validate":
        rep = validate(inp)
        if args.format == "json":
            out.write(dumps({"status": rep.status, "reason": rep.reason}))
        else:
            out.write(rep.status + (f": {rep.reason}" if rep.reason else "") + "\n")
        return EXIT_INVALID if rep.status == "invalid" else EXIT_OK

    if args.command == "h-classes":
        rep = validate(inp)
        if rep.status == "invalid":
            raise InvalidInput(rep.reason)
        classes = h_classes(inp.d1, inp.d2, inp.level)
        if args.format == "json":
            out.write(dumps([{"modulus": c.modulus, "residues": list(c.residues)} for c in classes]))
        else:
            out.write("".join(f"{c}\n" for c in classes))
        return EXIT_OK

    if args.command == "explicit":
        if args.h is not None:
            cls = find_class(inp.d1, inp.d2, inp.level, _parse_h(args.h))
            report = explicit_pair(inp, cls)
        else:
            report = explicit_total(inp)
        _emit_report(report, args.format, out)
        return EXIT_OK

    if args.command == "repnum":
        _emit_report(repnum_total(inp, args.genus_source), args.format, out)
        return EXIT_OK

    if args.command == "crosscheck":
        c = crosscheck(inp)
        if args.format == "json":
            out.write(dumps({
                "equal": c.equal,
                "totals": {k: loglinear_to_json(v) for k, v in c.totals.items()},
                "totals_float": {k: round15(float(v)) for k, v in c.totals.items()},
                "skipped": c.skipped,
            }))
        else:
            for k, v in c.totals.items():
                out.write(f"{k:>15}: {v}\n")
            for k, why in c.skipped.items():
                out.write(f"{k:>15}: skipped ({why})\n")
            out.write("equal\n" if c.equal else "MISMATCH\n")
        return EXIT_OK if c.equal else EXIT_MISMATCH
    raise AssertionError(args.command)


def _error(kind: str, msg: str) -> None:
    sys.stderr.write(dumps({"error": kind, "message": msg}))


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    logging.basicConfig(level=os.environ.get(LOG_ENV, "WARNING").upper(), stream=sys.stderr)
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    # buffer so that a failure never leaves partial output behind
    buf = io.StringIO()
    try:
        code = _run(args, buf)
    except InvalidInput as exc:
        _error("invalid-input", str(exc))
        return EXIT_INVALID
    except UnsupportedConfiguration as exc:
        _error("unsupported-configuration", str(exc))
        return EXIT_UNSUPPORTED
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
