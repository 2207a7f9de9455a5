"""
Author: the ack_inverse developers
October 2026

--------------------------------------------------------------------------------
Copyright (C) 2026 the ack_inverse developers

This file is part of the ack_inverse program.

This program is free software:
you can redistribute it and/or modify it under the terms
of the GNU General Public License as published by the Free Software Foundation,
either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY;
without even the implied warranty of MERCHANTABILITY
or FITNESS FOR A PARTICULAR PURPOSE.
See the GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.
If not, see <https://www.gnu.org/licenses/>.

--------------------------------------------------------------------------------
File content:
Command-line interface `ack-inverse`.

Exit status: 0 on success, 1 when a predicate is false or a certificate
is refuted, 2 on usage errors, 3 when a bit or label budget is exceeded.
Numbers of at most 64 binary digits are printed in decimal,
larger ones as `0b` followed by their binary digits.
"""
from __future__ import annotations
import argparse
import contextlib
import logging
import os
import sys
from typing import List, Optional, Sequence, TextIO, Union

from ack_inverse import config
from ack_inverse.ack_oracle import EXCEEDS_BUDGET, AckermannOracle
from ack_inverse.bignat import BigNat, parse_literal
from ack_inverse.encoding import (pair, seq_decode, seq_encode, triple,
                                  unpair, untriple)
from ack_inverse.errors import AckInverseError, ArgumentError, BudgetExceeded
from ack_inverse.inverse import alpha, alpha_prime, inv_ak, inv_trace, iter_log
from ack_inverse.witness import (Refuted, build_witness, check_graph, check_lt,
                                 comput_lt_verify)
from ack_tools.run_bench import run_bench, write_records_csv
from ack_tools.storage import (parse_binary_string, read_witness_file,
                               store_log, write_witness_file)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """Raises on usage errors instead of exiting the interpreter."""

    def error(self, message: str):
        raise _UsageError(message)


def _natural(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return int(text)


def _size_list(text: str) -> List[int]:
    return [_natural(field.strip()) for field in text.split(",")]


def format_natural(value: Union[BigNat, int]) -> str:
    if isinstance(value, int):
        value = BigNat.from_int(value)
    if len(value.bits) <= config.MACHINE_WORD_BITS:
        return str(value.to_int())
    return "0b" + value.to_binary_string()


def hyperparameters_path(csv_path: str) -> str:
    """`runs/x.csv` -> `runs/x.hyperparameters.json`"""
    stem, _ = os.path.splitext(csv_path)
    return stem + ".hyperparameters.json"


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="ack-inverse",
        description="Inverse Ackermann function in linear time.")
    parser.add_argument("--budget", type=_natural,
                        default=config.DEFAULT_BIT_BUDGET,
                        help="maximum bit length of any materialized value")
    parser.add_argument("--label-budget", type=_natural,
                        default=config.DEFAULT_LABEL_BUDGET,
                        help="maximum number of labels of a certificate")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log INFO (-v) or DEBUG (-vv) messages to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("alpha", help="inverse Ackermann function")
    sub.add_argument("m")
    sub = commands.add_parser("alpha-prime", help="alpha(log(log(m)))")
    sub.add_argument("m")
    sub = commands.add_parser("inv", help="least j with A(k, j) >= m")
    sub.add_argument("-k", type=_natural, required=True)
    sub.add_argument("m")
    sub.add_argument("--trace", action="store_true",
                     help="also print the trace n_0 ... n_s (k >= 1)")
    sub = commands.add_parser("log", help="iterated logarithm log^(j)(m)")
    sub.add_argument("m")
    sub.add_argument("j", type=_natural)
    sub = commands.add_parser("ack", help="evaluate A(k, n)")
    sub.add_argument("k", type=_natural)
    sub.add_argument("n", type=_natural)
    sub.add_argument("--max-bits", type=_natural, default=None)
    sub = commands.add_parser("ack-diag", help="evaluate A(n, n)")
    sub.add_argument("n", type=_natural)
    sub.add_argument("--max-bits", type=_natural, default=None)
    for name, text in (("check-lt", "decide A(k, n) < m"),
                       ("graph", "decide A(k, n) = m")):
        sub = commands.add_parser(name, help=text)
        sub.add_argument("k", type=_natural)
        sub.add_argument("n", type=_natural)
        sub.add_argument("m")

    sub = commands.add_parser("pair", help="Cantor pairing <u,v>")
    sub.add_argument("values", type=_natural, nargs=2)
    sub = commands.add_parser("unpair", help="inverse of pair")
    sub.add_argument("code", type=_natural)
    sub = commands.add_parser("triple", help="<u,v,w> = <<u,v>,w>")
    sub.add_argument("values", type=_natural, nargs=3)
    sub = commands.add_parser("untriple", help="inverse of triple")
    sub.add_argument("code", type=_natural)

    seq = commands.add_parser("seq", help="sequence codes")
    seq_commands = seq.add_subparsers(dest="seq_command", required=True)
    sub = seq_commands.add_parser("encode")
    sub.add_argument("values", type=_size_list,
                     help="comma-separated decimal naturals")
    sub = seq_commands.add_parser("decode")
    sub.add_argument("code", help="binary string, most significant first")

    witness = commands.add_parser("witness", help="certificates of A(k,n) < m")
    witness_commands = witness.add_subparsers(dest="witness_command",
                                              required=True)
    sub = witness_commands.add_parser("build")
    sub.add_argument("k", type=_natural)
    sub.add_argument("n", type=_natural)
    sub.add_argument("--r", type=_natural, required=True,
                     help="the leaf threshold Inv_(A_3)(m)")
    sub.add_argument("-o", "--output", default=None)
    sub = witness_commands.add_parser("verify")
    sub.add_argument("file")

    sub = commands.add_parser("bench", help="scaling benchmark")
    sub.add_argument("--sizes", type=_size_list,
                     default=list(config.DEFAULT_BENCH_SIZES))
    sub.add_argument("--reps", type=_natural, default=config.DEFAULT_BENCH_REPS)
    sub.add_argument("--seed", type=int, default=config.DEFAULT_BENCH_SEED)
    sub.add_argument("--out", required=True,
                     help="CSV file to write; the parameters go next to it, "
                     "in <stem>.hyperparameters.json")
    return parser


def _configure_logging(verbosity: int):
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT)
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.getLogger().setLevel(level)


def run_cli(argv: Sequence[str], stdout: Optional[TextIO] = None,
            stderr: Optional[TextIO] = None) -> int:
    """
    Run one command.

    @param argv: the arguments, without the program name.
    @type argv: Sequence[str]
    @param stdout: stream for the answers, `sys.stdout` by default.
    @type stdout: Optional[TextIO]
    @param stderr: stream for one-line diagnostics, `sys.stderr` by default.
    @type stderr: Optional[TextIO]

    @return int, the exit status.
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout):
            args = parser.parse_args(list(argv))
    except _UsageError as error:
        print(f"ack-inverse: error: {error}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exit_request:
        # --help
        return int(exit_request.code or 0)
    _configure_logging(args.verbose)
    logger.debug("Running command %s", args.command)

    try:
        return _dispatch(args, stdout)
    except BudgetExceeded as error:
        print(f"ack-inverse: budget exceeded: {error}", file=stderr)
        return EXIT_BUDGET
    except (AckInverseError, ValueError, OSError) as error:
        print(f"ack-inverse: error: {error}", file=stderr)
        return EXIT_USAGE


def _print_truth(value: bool, stdout: TextIO) -> int:
    print("true" if value else "false", file=stdout)
    return EXIT_OK if value else EXIT_FALSE


def _dispatch(args: argparse.Namespace, stdout: TextIO) -> int:
    command = args.command
    budget = args.budget

    if command in ("alpha", "alpha-prime"):
        operation = alpha if command == "alpha" else alpha_prime
        m = parse_literal(args.m, budget)
        print(operation(m, label_budget=args.label_budget), file=stdout)
    elif command == "inv":
        if args.trace and args.k < 1:
            raise ArgumentError(f"--trace needs k >= 1, got {args.k}")
        m = parse_literal(args.m, budget)
        print(inv_ak(args.k, m), file=stdout)
        if args.trace:
            trace = inv_trace(args.k, m)
            print(" ".join(format_natural(step) for step in trace.steps),
                  file=stdout)
    elif command == "log":
        print(iter_log(parse_literal(args.m, budget), args.j), file=stdout)
    elif command in ("ack", "ack-diag"):
        k = args.k if command == "ack" else args.n
        max_bits = budget if args.max_bits is None else args.max_bits
        value = AckermannOracle(max_bits).evaluate(k, args.n)
        if value is EXCEEDS_BUDGET:
            raise BudgetExceeded(f"A({k}, {args.n}) needs more than "
                                 f"{max_bits} bits", None, max_bits)
        print(format_natural(value), file=stdout)
    elif command in ("check-lt", "graph"):
        predicate = check_lt if command == "check-lt" else check_graph
        m = parse_literal(args.m, budget)
        return _print_truth(predicate(args.k, args.n, m,
                                      label_budget=args.label_budget), stdout)
    elif command == "pair":
        print(pair(*args.values), file=stdout)
    elif command == "unpair":
        print(" ".join(map(str, unpair(args.code))), file=stdout)
    elif command == "triple":
        print(triple(*args.values), file=stdout)
    elif command == "untriple":
        print(" ".join(map(str, untriple(args.code))), file=stdout)
    elif command == "seq":
        return _dispatch_seq(args, stdout)
    elif command == "witness":
        return _dispatch_witness(args, stdout)
    elif command == "bench":
        return _dispatch_bench(args, stdout)
    return EXIT_OK


def _dispatch_seq(args: argparse.Namespace, stdout: TextIO) -> int:
    if args.seq_command == "encode":
        print(seq_encode(args.values).to_binary_string(), file=stdout)
    else:
        values = seq_decode(parse_binary_string(args.code))
        print(",".join(map(str, values)), file=stdout)
    return EXIT_OK


def _dispatch_witness(args: argparse.Namespace, stdout: TextIO) -> int:
    if args.witness_command == "verify":
        code, k, n, r = read_witness_file(args.file)
        return _print_truth(comput_lt_verify(code, k, n, r), stdout)

    result = build_witness(args.k, args.n, args.r, args.label_budget)
    if isinstance(result, Refuted):
        print(f"refuted: {result.label} ({result.reason})", file=stdout)
        return EXIT_FALSE
    if args.output is None:
        print(f"{result.k} {result.n} {result.r}", file=stdout)
        print(result.to_seq_code().to_binary_string(), file=stdout)
    else:
        write_witness_file(result, args.output)
        print(f"{len(result)} labels written to {args.output}", file=stdout)
    return EXIT_OK


def _dispatch_bench(args: argparse.Namespace, stdout: TextIO) -> int:
    records = run_bench(args.sizes, args.reps, args.seed, args.budget,
                        verbose=args.verbose > 0)
    write_records_csv(records, args.out)
    hyperparams = {"sizes": args.sizes, "reps": args.reps,
                   "seed": args.seed, "budget": args.budget}
    store_log(hyperparams, hyperparameters_path(args.out))
    print(f"{len(records)} records written to {args.out}", file=stdout)
    return EXIT_OK


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
