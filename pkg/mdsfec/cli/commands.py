"""Command implementations. Each returns an exit code:
0 success, 1 decode failure or demo mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
from fractions import Fraction
from pathlib import Path
from typing import TextIO

from mdsfec.cli import reports, streams
from mdsfec.cli.demo import print_demo
from mdsfec.cli.diagnostics import DiagnosticLog
from mdsfec.code import codec, verify
from mdsfec.code.fourier import FourierCtx
from mdsfec.code.mdscode import CodeSpec
from mdsfec.config import Config
from mdsfec.errors import CharacteristicError, DescriptorError, NotPrimeError, OracleLimitError
from mdsfec.field.numtheory import is_prime
from mdsfec.field.search import FieldCandidate, candidate_fields, order_mod
from mdsfec.plan import planner

EXIT_OK = 0
EXIT_DECODE = 1
EXIT_USAGE = 2


def load_code(path: str) -> CodeSpec:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise DescriptorError(f"cannot read {path}: {e.strerror}") from None
    return CodeSpec.from_descriptor(text)


def code_from_args(args: argparse.Namespace) -> CodeSpec:
    if getattr(args, "code", None):
        return load_code(args.code)
    if args.n is None or args.r is None or args.p is None:
        raise DescriptorError("give --code, or all of --n, --r and --p")
    ctx = FourierCtx.for_length(args.n, args.p)
    return CodeSpec(ctx, args.r, args.b, args.k)


def cmd_field(args: argparse.Namespace, config: Config, out: TextIO, diag: DiagnosticLog) -> int:
    n = args.n
    if n < 2:
        diag.log_error("field", f"length must be >= 2, got {n}")
        return EXIT_USAGE
    if args.p is not None:
        if not is_prime(args.p):
            raise NotPrimeError(f"characteristic {args.p} is not prime")
        if n % args.p == 0:
            raise CharacteristicError(
                f"{args.p} divides {n}: no field of characteristic {args.p} "
                f"contains a primitive {n}-th root of unity"
            )
        fields = [FieldCandidate(args.p, order_mod(args.p, n))]
    else:
        limit = args.limit or config.prime_bound(n)
        fields = candidate_fields(n, limit)[: args.top or config.field_limit]
    reports.render(out, reports.field_report(n, fields), title=f"Fourier {n}x{n} fields")
    preferred = next((c for c in fields if c.is_prime_field), None)
    if preferred is not None:
        diag.log_info(f"preferred: {preferred.name} (modular arithmetic)")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, config: Config, out: TextIO, diag: DiagnosticLog) -> int:
    ctx = FourierCtx.for_length(args.n, args.p)
    code = CodeSpec(ctx, args.r, args.b, args.k)
    text = code.to_descriptor()
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    diag.log_ok("gen", str(code))
    if args.verify:
        try:
            d = verify.min_distance(code.field, code.generator, config.oracle_limit)
        except OracleLimitError as e:
            diag.log_info(f"distance not checked: {e}")
        else:
            if d != code.d:
                diag.log_error("verify", f"minimum distance {d}, expected {code.d}")
                return EXIT_DECODE
            diag.log_ok("verify", f"minimum distance {d}")
    return EXIT_OK


def cmd_encode(
    args: argparse.Namespace, config: Config, out: TextIO, diag: DiagnosticLog, inp: TextIO
) -> int:
    code = load_code(args.code)
    symbols = streams.read_symbols(inp, code.field)
    for block in streams.blocks(symbols, code.r):
        streams.write_block(out, codec.encode(code, block))
    return EXIT_OK


def cmd_decode(
    args: argparse.Namespace, config: Config, out: TextIO, diag: DiagnosticLog, inp: TextIO
) -> int:
    code = load_code(args.code)
    symbols = streams.read_symbols(inp, code.field)
    status = EXIT_OK
    for i, block in enumerate(streams.blocks(symbols, code.n), 1):
        outcome = codec.decode(code, block)
        streams.write_block(out, outcome.data)
        name = f"block {i}"
        if not outcome.ok:
            diag.log_error(name, f"FAIL {outcome.status.value} at {outcome.stage}: {outcome.reason}")
            status = EXIT_DECODE
        elif outcome.positions:
            diag.log_fix(name, "corrected positions " + ",".join(map(str, outcome.positions)))
        else:
            diag.log_ok(name, "no errors")
    return status


def cmd_plan(args: argparse.Namespace, config: Config, out: TextIO, diag: DiagnosticLog) -> int:
    plan = planner.plan_code(args.rate, args.errors, args.p, config.prime_limit)
    reports.render(out, reports.plan_report(plan), title="Code parameters")
    fields = plan.fields[: config.field_limit]
    reports.render(out, reports.field_report(plan.n, fields), title=f"Fields for n={plan.n}")
    if plan.n != plan.min_length:
        diag.log_info(f"length adjusted from {plan.min_length} to {plan.n} for characteristic {args.p}")
    return EXIT_OK


def cmd_series(args: argparse.Namespace, config: Config, out: TextIO, diag: DiagnosticLog) -> int:
    rate: Fraction = args.rate
    if args.prime_field or args.primes:
        if args.primes:
            primes = [int(x) for x in args.primes.split(",") if x.strip()]
        else:
            primes = planner.primes_congruent_one(rate.denominator)
        entries = planner.prime_series(rate, primes, args.count)
        title = f"Prime-field series, R = {rate}"
    else:
        if args.p is None:
            diag.log_error("series", "give --p or --prime-field")
            return EXIT_USAGE
        if rate.denominator % args.p == 0 and args.eps is not None:
            approx = planner.approx_rate(rate, args.eps, args.p)
            diag.log_info(f"rate {rate} replaced by {approx} (denominator prime to {args.p})")
            rate = approx
        entries = planner.series_multiples(rate.denominator, rate.numerator, args.p, args.count)
        title = f"Characteristic-{args.p} series, R = {rate}"
    reports.render(out, reports.series_report(entries), title=title)
    return EXIT_OK


def cmd_family(args: argparse.Namespace, config: Config, out: TextIO, diag: DiagnosticLog) -> int:
    entries = planner.odd_distance_family(args.p, args.beta)
    q = args.p**args.beta
    name = f"GF({args.p})" if args.beta == 1 else f"GF({args.p}^{args.beta})"
    reports.render(out, reports.family_report(entries), title=f"Length {q - 1} codes over {name}")
    return EXIT_OK


def cmd_demo(args: argparse.Namespace, config: Config, out: TextIO, diag: DiagnosticLog) -> int:
    status = print_demo(out)
    if status:
        diag.log_error("demo", "transcript differs from the expected values")
    return status


def cmd_inspect(args: argparse.Namespace, config: Config, out: TextIO, diag: DiagnosticLog) -> int:
    from mdsfec.ui.app import InspectorApp

    InspectorApp(code_from_args(args), config).run()
    return EXIT_OK
