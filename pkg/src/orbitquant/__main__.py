#!/usr/bin/env python
# coding: UTF-8

import argparse
import sys

from orbitquant import commands
from orbitquant.__about__ import __summary__, __title__, __version__
from orbitquant.config import DEFAULT_BOUND, DEFAULT_OUT_PATH, FORMATS, RunConfig
from orbitquant.errors import OrbitQuantError
from orbitquant.orbits import Partition
from orbitquant.suites import SUITES
from orbitquant.vogan import CHARACTER_TAGS
from orbitquant.writers import WRITERS

EXIT_OK = 0
EXIT_FAIL = 1


def build_parser() -> argparse.ArgumentParser:
    # Options shared by every subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default="json", help='Output format. Default is json.')
    common.add_argument('--out-path', type=str, default=DEFAULT_OUT_PATH,
                        help=f'Output path of the xlsx format. Default is {DEFAULT_OUT_PATH}.')
    common.add_argument('--cache-dir', type=str, default=None,
                        help='Directory for the weight multiplicity cache. Deleting it never changes results.')
    common.add_argument('--threads', type=int, default=1, help='Number of worker threads. Default is 1.')
    common.add_argument('--catalog', type=str, default=None,
                        help='JSON catalog file adding or overriding left-cell data for orbits.')
    common.add_argument('--verbose', action='store_true', help='Print diagnostics and progress to stderr.')

    usage_text = "Usage: python -m orbitquant [command] [options]"
    parser = argparse.ArgumentParser(description=f"{__title__}: {__summary__}.",
                                     usage=usage_text, formatter_class=argparse.HelpFormatter)
    parser.add_argument('--version', action='version', version=f"{__title__} {__version__}")
    subparsers = parser.add_subparsers(dest='command')

    # 'orbit' subcommand parser
    parser_orbit = subparsers.add_parser('orbit', parents=[common],
                                         help='Show the dual orbit, h, lambda_O and the catalog entry of an orbit.')
    parser_orbit.add_argument('--partition', type=str, required=True, help='Type C partition, e.g. 2,2,1,1 or 2^2,1^2')

    # 'dual' subcommand parser
    parser_dual = subparsers.add_parser('dual', parents=[common], help='Lusztig-Spaltenstein dual of a type C orbit.')
    parser_dual.add_argument('--partition', type=str, required=True, help='Type C partition, e.g. 2,2,1,1')

    # 'character' subcommand parser
    parser_char = subparsers.add_parser('character', parents=[common], help='Print a virtual character.')
    parser_char.add_argument('--partition', type=str, required=True, help='Type C partition, e.g. 2,2')
    parser_char.add_argument('--tag', choices=commands.CHARACTER_CHOICES, default="plus",
                             help='X^+ (plus), X^- (minus), R_e (Re), R_s (Rs) or McGovern\'s product (mcgovern).')

    # 'ktypes' subcommand parser
    parser_ktypes = subparsers.add_parser('ktypes', parents=[common],
                                          help='Decompose a virtual character into K-types up to a bound.')
    parser_ktypes.add_argument('--partition', type=str, required=True, help='Type C partition, e.g. 2,2')
    parser_ktypes.add_argument('--tag', choices=commands.CHARACTER_CHOICES, default="plus", help='Character to decompose.')
    parser_ktypes.add_argument('--bound', type=int, default=DEFAULT_BOUND,
                               help=f'Largest first coordinate scanned. Default is {DEFAULT_BOUND}.')

    # 'gamma' subcommand parser
    parser_gamma = subparsers.add_parser('gamma', parents=[common], help='Maximal term of X^+, X^- or R_e.')
    parser_gamma.add_argument('--partition', type=str, required=True, help='Type C partition, e.g. 2,2,1,1')
    parser_gamma.add_argument('--tag', choices=CHARACTER_TAGS, default="plus", help='Character to inspect.')

    # 'verify' subcommand parser
    parser_verify = subparsers.add_parser('verify', parents=[common], help='Run a verification suite.')
    parser_verify.add_argument('--suite', choices=list(SUITES.keys()), required=True, help='Suite to run.')
    parser_verify.add_argument('--p', type=int, default=None, help='Family parameter p of (2^2p 1^2q).')
    parser_verify.add_argument('--q', type=int, default=None, help='Family parameter q of (2^2p 1^2q).')
    parser_verify.add_argument('--r', type=int, default=None, help='Runs q = 2r and q = 2r+1.')
    parser_verify.add_argument('--n', type=int, default=None, help='Rank for the denominator suite.')
    parser_verify.add_argument('--bound', type=int, default=DEFAULT_BOUND,
                               help=f'Largest first coordinate scanned by K-type checks. Default is {DEFAULT_BOUND}.')

    return parser


def run(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)

    if args.command == 'verify':
        report = commands.verify(config, args.suite, p=args.p, q=args.q, r=args.r, n=args.n)
    else:
        partition = Partition.from_string(args.partition)

        if args.command == 'orbit':
            report = commands.orbit(config, partition)
        elif args.command == 'dual':
            report = commands.dual(config, partition)
        elif args.command == 'character':
            report = commands.character(config, partition, args.tag)
        elif args.command == 'ktypes':
            report = commands.ktypes(config, partition, args.tag)
        elif args.command == 'gamma':
            report = commands.gamma_certificate(config, partition, args.tag)
        else:
            raise ValueError(f"Unknown command: {args.command}")

    WRITERS[config.fmt].write(report, config)

    return EXIT_OK if report.ok else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return EXIT_OK

    try:
        return run(args)
    except OrbitQuantError as e:
        print(f"[Error] {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
