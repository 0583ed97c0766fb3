"""
Command-line front end.

    python tools/frex.py solve --pres monoid --mode frex --algebra nat-add "(x + 3) + 2 = x + 5"
    python tools/frex.py check goal.cert
    python tools/frex.py lemma --name unitSandwich "0 + (x + 0) + 0 = x"

Exit status: 0 proved / certificate ok, 1 not provable / certificate
rejected, 2 usage or parse error.
"""

import os
import sys
sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))
sys.path.append(os.path.dirname(os.path.abspath(__file__)))
import argparse

from utils import EXIT_USAGE, check_file, lemma, solve
from src.misc import get_console
from src.zoo.algebra import NAMES as ALGEBRAS
from src.zoo.frexlet import MODES, PRESENTATIONS


def build_parser():
    parser = argparse.ArgumentParser(prog='frex', description='proof-producing simplifier for the monoid family')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('solve', help='solve a goal and print its proof')
    p.add_argument('--pres', type=str, default='monoid', choices=PRESENTATIONS,
                   help='presentation (default: monoid)')
    p.add_argument('--mode', type=str, default='fral', choices=MODES,
                   help='free algebra (fral) or free extension of --algebra (frex) (default: fral)')
    p.add_argument('--algebra', type=str, default=None, choices=ALGEBRAS,
                   help='constants algebra for --mode frex (default: None)')
    p.add_argument('--emit', type=str, default=None,
                   help='write a certificate to this path (default: None)')
    p.add_argument('--print', type=str, default='unicode', choices=['unicode', 'latex'],
                   help='proof format (default: unicode)')
    p.add_argument('--verbose', '-v', action='store_true',
                   help='print solve / check timings to stderr')
    p.add_argument('goal', type=str, help='"lhs = rhs"')

    p = sub.add_parser('check', help='verify a certificate')
    p.add_argument('file', type=str)

    p = sub.add_parser('lemma', help='prove a free-algebra goal as a named lemma')
    p.add_argument('--name', type=str, required=True)
    p.add_argument('--pres', type=str, default='monoid', choices=PRESENTATIONS,
                   help='presentation (default: monoid)')
    p.add_argument('--emit', type=str, default=None,
                   help='write a certificate to this path (default: None)')
    p.add_argument('--print', type=str, default='unicode', choices=['unicode', 'latex'],
                   help='proof format (default: unicode)')
    p.add_argument('goal', type=str)
    return parser


COMMANDS = {'solve': solve, 'check': check_file, 'lemma': lemma}


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0
    out, err = get_console(), get_console(stderr=True)
    return COMMANDS[args.command](args, out, err)


if __name__ == '__main__':
    sys.exit(run())
