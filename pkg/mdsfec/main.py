"""Entry point for mdsfec."""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from rich.console import Console
from rich.logging import RichHandler

from mdsfec.cli import commands
from mdsfec.cli.diagnostics import DiagnosticLog
from mdsfec.config import Config
from mdsfec.errors import MdsFecError
from mdsfec.plan.planner import parse_rate


def _rate(text: str) -> Fraction:
    try:
        return parse_rate(text)
    except MdsFecError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _code_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--n", type=int, required=required, help="code length")
    p.add_argument("--r", type=int, required=required, help="dimension")
    p.add_argument("--p", type=int, required=required, help="field characteristic")
    p.add_argument("--b", type=int, default=0, help="first row index (default 0)")
    p.add_argument("--k", type=int, default=1, help="row step, coprime to n (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdsfec",
        description="MDS codes from Fourier matrices over finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="fields holding a primitive n-th root of unity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, help="only this characteristic")
    p.add_argument("--limit", type=int, default=0, help="largest characteristic scanned")
    p.add_argument("--top", type=int, default=0, help="number of fields listed")

    p = sub.add_parser("gen", help="write a code descriptor")
    _code_args(p, required=True)
    p.add_argument("--out", help="descriptor file (default stdout)")
    p.add_argument("--verify", action="store_true", help="confirm the MDS distance by brute force")

    for name, text in (("encode", "encode r-symbol blocks"), ("decode", "decode n-symbol blocks")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--code", required=True, help="code descriptor file")
        p.add_argument("--in", dest="infile", help="input symbols (default stdin)")
        p.add_argument("--out", dest="outfile", help="output symbols (default stdout)")

    p = sub.add_parser("plan", help="parameters for a rate and error capability")
    p.add_argument("--rate", type=_rate, required=True, help="rate as a/b")
    p.add_argument("--errors", type=int, required=True, help="errors to correct")
    p.add_argument("--p", type=int, help="required characteristic")

    p = sub.add_parser("series", help="infinite series of codes with a given rate")
    p.add_argument("--rate", type=_rate, required=True)
    p.add_argument("--p", type=int, help="characteristic for the multiples series")
    p.add_argument("--eps", type=Fraction, help="allowed rate increase when p divides the denominator")
    p.add_argument("--prime-field", action="store_true", help="series over prime fields GF(p), p = 1 mod denominator")
    p.add_argument("--primes", help="comma-separated primes for the prime-field series")
    p.add_argument("--count", type=int, default=6)

    p = sub.add_parser("family", help="length p^beta - 1 codes of odd distance")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--beta", type=int, default=1)

    sub.add_parser("demo", help="worked GF(13) decoding example")

    p = sub.add_parser("inspect", help="interactive code inspector")
    p.add_argument("--code", help="code descriptor file")
    _code_args(p, required=False)
    return parser


def run(
    argv: Sequence[str] | None = None,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    config = Config.load()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=config.log_level,
        format="%(message)s",
        handlers=[
            RichHandler(console=Console(file=stderr or sys.stderr), show_time=False, show_path=False)
        ],
        force=True,
    )
    out = stdout or sys.stdout
    diag = DiagnosticLog(stderr)
    try:
        if args.command in ("encode", "decode"):
            return _run_stream(args, config, out, diag, stdin or sys.stdin)
        handler = getattr(commands, f"cmd_{args.command}")
        return handler(args, config, out, diag)
    except MdsFecError as e:
        diag.log_error(args.command, str(e))
        return commands.EXIT_USAGE


def _run_stream(
    args: argparse.Namespace, config: Config, out: TextIO, diag: DiagnosticLog, inp: TextIO
) -> int:
    handler = commands.cmd_encode if args.command == "encode" else commands.cmd_decode
    try:
        src = open(args.infile) if args.infile else inp
    except OSError as e:
        diag.log_error(args.command, f"cannot read {args.infile}: {e.strerror}")
        return commands.EXIT_USAGE
    try:
        if args.outfile:
            with open(args.outfile, "w") as dst:
                return handler(args, config, dst, diag, src)
        return handler(args, config, out, diag, src)
    finally:
        if args.infile:
            src.close()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
