"""
Timing of solve + check + certificate round trip on large random goals.

    python benchmark/solve_timing.py --goals 50 --leaves 60 --support 15

requires psutil and tabulate
"""

import os
import sys
sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))
import argparse

import numpy as np
import psutil
from tabulate import tabulate

from src.frexlet.api import solve_fral, solve_frex
from src.misc import MetricLogger, SmoothedValue, get_console
from src.oracle.sampling import solvable_goal
from src.proof.certificate import check_certificate, emit_certificate
from src.proof.checker import check
from src.proof.linear import linearize, remove_loops
from src.zoo.algebra import get_algebra
from src.zoo.frexlet import get_frexlet

CASES = [
    ('monoid', 'fral', None),
    ('cmonoid', 'fral', None),
    ('monoid', 'frex', 'nat-add'),
    ('cmonoid', 'frex', 'nat-add'),
]


def round_trip(frexlet, goal, algebra=None):
    """Solve, check, linearise and verify the emitted certificate; returns the step count."""
    solver = solve_fral if algebra is None else solve_frex
    d = solver(frexlet, goal)
    assert d is not None, 'benchmark goals are solvable by construction'
    ctx = frexlet.check_context(goal.support)
    check(ctx, goal.lhs, goal.rhs, d)
    lin = remove_loops(ctx, linearize(ctx, d))
    check_certificate(emit_certificate(goal, lin, frexlet.presentation, algebra))
    return len(lin)


def format_size(size: float) -> str:
    for unit in ('', 'K', 'M', 'G'):
        if size < 1024:
            break
        size /= 1024.0
    return "%.1f%s" % (size, unit)


def main(goals=50, leaves=60, support=15, seed=0, print_freq=10):
    rng = np.random.default_rng(seed)
    process = psutil.Process(os.getpid())
    console = get_console()
    rows = []
    for pres, mode, alg_name in CASES:
        alg = get_algebra(alg_name) if alg_name is not None else None
        frexlet = get_frexlet(pres, mode, alg)
        const = (lambda r: int(r.integers(0, 4))) if alg is not None else None
        batch = [solvable_goal(rng, pres, support, leaves, alg, const=const) for _ in range(goals)]

        metric_logger = MetricLogger(batch, print_freq=print_freq, header=f'{pres}/{mode}:')
        metric_logger.add_meter('time', SmoothedValue(window_size=goals))
        steps = []
        for goal in metric_logger.log_every():
            steps.append(metric_logger.timed('time', round_trip, frexlet, goal, alg))

        t = metric_logger.meters['time']
        rows.append((pres, mode, alg_name or '-', goals, f'{t.median:.4f}', f'{t.avg:.4f}', f'{t.max:.4f}',
                     int(np.median(steps)), format_size(process.memory_info().rss)))

    console.print(tabulate(rows, headers=['presentation', 'mode', 'algebra', 'goals', 'median s', 'mean s',
                                          'max s', 'median steps', 'rss']), markup=False, highlight=False)


if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    parser.add_argument('--goals', type=int, default=50,
                        help='goals per solver (default: 50)')
    parser.add_argument('--leaves', type=int, default=60,
                        help='leaves per goal side (default: 60)')
    parser.add_argument('--support', type=int, default=15,
                        help='number of free variables (default: 15)')
    parser.add_argument('--seed', type=int, default=0,
                        help='random seed (default: 0)')
    parser.add_argument('--print_freq', type=int, default=10,
                        help='progress line every N goals (default: 10)')
    args = parser.parse_args()
    main(**vars(args))
