"""
Random terms and provably-equal term pairs for property tests and benchmarks.
"""

from __future__ import annotations

from typing import Callable, List, Optional, Tuple

import numpy as np

from ..core.algebra import Algebra
from ..core.term import App, ExtTerm, Goal, Sta, Var, term_size
from ..zoo.presentation import INV, MUL, UNIT, get_presentation
from .bfs import OracleConfig, rewrites


def random_term(rng: np.random.Generator, support: int, leaves: int, unit_p: float = 0.15,
                inv_p: float = 0.0, const: Optional[Callable[[np.random.Generator], object]] = None,
                const_p: float = 0.0) -> ExtTerm:
    """A random product tree with exactly ``leaves`` leaves."""
    if leaves <= 1:
        r = rng.random()
        if const is not None and r < const_p:
            t = Sta(const(rng))
        elif r < const_p + unit_p or support == 0:
            t = App(UNIT)
        else:
            t = Var(int(rng.integers(0, support)))
    else:
        k = int(rng.integers(1, leaves))
        t = App(MUL, (random_term(rng, support, k, unit_p, inv_p, const, const_p),
                      random_term(rng, support, leaves - k, unit_p, inv_p, const, const_p)))
    if inv_p and rng.random() < inv_p:
        t = App(INV, (t,))
    return t


def perturb(rng: np.random.Generator, cfg: OracleConfig, t: ExtTerm, steps: int, max_size: int = 40) -> ExtTerm:
    """Apply ``steps`` random single rewrites; the result is provably equal to ``t``."""
    for _ in range(steps):
        options = [u for u, _ in rewrites(cfg, t) if term_size(u) <= max_size]
        if not options:
            break
        t = options[int(rng.integers(0, len(options)))]
    return t


def family_options(family: str, algebra: Optional[Algebra] = None, const=None):
    """Keyword arguments for ``random_term`` that fit a presentation family."""
    opts = {'inv_p': 0.2 if family == 'invmonoid' else 0.0}
    if algebra is not None:
        opts.update(const=const or algebra.sample, const_p=0.3)
    return opts


def random_pair(rng: np.random.Generator, family: str, support: int, leaves: int,
                algebra: Optional[Algebra] = None, equal_p: float = 0.5, steps: int = 6, const=None) -> Goal:
    """
    A goal whose sides are equal by construction with probability ``equal_p``,
    otherwise two independent terms (which may still happen to be equal).
    """
    opts = family_options(family, algebra, const)
    lhs = random_term(rng, support, leaves, **opts)
    if rng.random() < equal_p:
        cfg = OracleConfig(get_presentation(family), algebra=algebra)
        rhs = perturb(rng, cfg, lhs, steps, max_size=2 * term_size(lhs) + 4)
    else:
        rhs = random_term(rng, support, int(rng.integers(1, leaves + 1)), **opts)
    return Goal(support, lhs, rhs)


def random_pairs(rng, family, count, max_support=3, max_leaves=4, **kwargs) -> List[Goal]:
    return [random_pair(rng, family, int(rng.integers(1, max_support + 1)), int(rng.integers(1, max_leaves + 1)), **kwargs)
            for _ in range(count)]


def solvable_goal(rng: np.random.Generator, family: str, support: int, leaves: int,
                  algebra: Optional[Algebra] = None, steps: int = 8, const=None) -> Goal:
    return random_pair(rng, family, support, leaves, algebra, equal_p=1.0, steps=steps, const=const)


def small_constants(algebra: Algebra) -> Tuple:
    """The constant pool used for oracle searches over a bundled algebra."""
    pools = {
        'nat-add': (0, 1, 2, 3),
        'nat-mul': (0, 1, 2, 3),
        'list-concat': ((), (0,), (1,), (0, 1)),
        'list-rev': ((), (0,), (1,), (0, 1)),
        'string-rev': ('', 'a', 'b', 'ab'),
        'trivial-monoid': ((),),
        'trivial-invmonoid': ((),),
    }
    return pools.get(algebra.name, ())
