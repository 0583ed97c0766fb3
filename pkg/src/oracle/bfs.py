"""
Bounded rewriting oracle.

Breadth-first search over single rewrite steps, from both goal sides at once:
every axiom in both directions at every position, evaluation of constant
applications, and (with a constant pool) un-evaluation of constants. Every
edge is a linear step, so a positive answer comes with a checkable proof.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Sequence, Tuple

from ..core.algebra import Algebra
from ..core.errors import BoundExceeded
from ..core.presentation import Presentation
from ..core.term import App, ExtTerm, Sta, Var, positions, replace_at, substitute, term_size, variables
from ..proof.derivation import ByAxiom, EvalStep
from ..proof.linear import HOLE, Direction, LinearDerivation, LinStep

DEFAULT_DEPTH = 6
DEFAULT_SIZE_SLACK = 2
DEFAULT_MAX_STATES = 100_000


@dataclass(frozen=True)
class OracleConfig:
    """
    depth: bound on the total number of steps
    max_size: bound on intermediate term size; None means the larger goal
        side plus ``size_slack``
    constants: pool used to un-evaluate constants (frex goals)
    """
    presentation: Presentation
    depth: int = DEFAULT_DEPTH
    max_size: Optional[int] = None
    size_slack: int = DEFAULT_SIZE_SLACK
    max_states: int = DEFAULT_MAX_STATES
    algebra: Optional[Algebra] = None
    constants: Tuple = ()

    def __post_init__(self):
        if self.depth < 1 or (self.max_size is not None and self.max_size < 1):
            raise ValueError('oracle bounds must be >= 1')


def match(pattern: ExtTerm, t: ExtTerm, sub: Dict[int, ExtTerm]) -> bool:
    if isinstance(pattern, Var):
        bound = sub.get(pattern.index)
        if bound is None:
            sub[pattern.index] = t
            return True
        return bound == t
    if isinstance(pattern, App):
        if not isinstance(t, App) or t.op != pattern.op or len(t.args) != len(pattern.args):
            return False
        return all(match(p, a, sub) for p, a in zip(pattern.args, t.args))
    return pattern == t


def _axiom_rewrites(presentation: Presentation, t: ExtTerm):
    for name, eq in presentation.axioms.items():
        for pattern, result, direction in ((eq.lhs, eq.rhs, Direction.FWD), (eq.rhs, eq.lhs, Direction.BWD)):
            if not set(variables(result)) <= set(variables(pattern)):
                continue
            sub = {}
            if match(pattern, t, sub):
                full = tuple(sub.get(i, Var(i)) for i in range(eq.support))
                yield substitute(result, full), direction, ByAxiom(name, full)


def _eval_rewrites(cfg: OracleConfig, t: ExtTerm):
    alg = cfg.algebra
    if alg is None:
        return
    if isinstance(t, App) and all(isinstance(a, Sta) for a in t.args):
        consts = tuple(a.value for a in t.args)
        yield Sta(alg.apply(t.op, *consts)), Direction.FWD, EvalStep(t.op, consts)
    if isinstance(t, Sta):
        for op, arity in alg.signature.ops.items():
            for consts in itertools.product(cfg.constants, repeat=arity):
                if alg.eq(alg.apply(op, *consts), t.value):
                    yield App(op, tuple(Sta(c) for c in consts)), Direction.BWD, EvalStep(op, consts)


def rewrites(cfg: OracleConfig, t: ExtTerm) -> Iterator[Tuple[ExtTerm, LinStep]]:
    """All single-step rewrites of ``t`` as (result, step from t to result)."""
    for path, sub in positions(t):
        focus = replace_at(t, path, HOLE) if path else None
        for result, direction, by in itertools.chain(_axiom_rewrites(cfg.presentation, sub), _eval_rewrites(cfg, sub)):
            yield replace_at(t, path, result), LinStep(focus, direction, by, path or None)


def _chain(parents, t):
    steps = []
    while parents[t] is not None:
        prev, step = parents[t]
        steps.append(step)
        t = prev
    steps.reverse()
    return steps


def oracle_proof(cfg: OracleConfig, lhs: ExtTerm, rhs: ExtTerm) -> Optional[LinearDerivation]:
    """
    A linear proof of ``lhs = rhs`` found by bidirectional search, or None when
    both searches saturate within the size bound without meeting. Raises
    BoundExceeded when the depth or state bound cuts the search short.
    """
    if lhs == rhs:
        return LinearDerivation(lhs, ())
    limit = cfg.max_size if cfg.max_size is not None else max(term_size(lhs), term_size(rhs)) + cfg.size_slack

    sides = [{lhs: None}, {rhs: None}]
    frontiers = [[lhs], [rhs]]
    depths = [0, 0]
    while True:
        if depths[0] + depths[1] >= cfg.depth:
            raise BoundExceeded(len(sides[0]) + len(sides[1]), cfg.depth)
        k = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        seen, other = sides[k], sides[1 - k]
        nxt = []
        for t in frontiers[k]:
            for u, step in rewrites(cfg, t):
                if u in seen or term_size(u) > limit:
                    continue
                seen[u] = (t, step)
                if u in other:
                    return _join(sides, u, lhs)
                nxt.append(u)
                if len(seen) + len(other) > cfg.max_states:
                    raise BoundExceeded(len(seen) + len(other), depths[0] + depths[1])
        if not nxt:
            return None
        frontiers[k] = nxt
        depths[k] += 1


def _join(sides, meet, lhs):
    from_lhs = _chain(sides[0], meet)
    from_rhs = _chain(sides[1], meet)
    back = [LinStep(s.focus, s.direction.flip(), s.by, s.path) for s in reversed(from_rhs)]
    return LinearDerivation(lhs, tuple(from_lhs + back))


def oracle_equal(cfg: OracleConfig, lhs: ExtTerm, rhs: ExtTerm) -> bool:
    return oracle_proof(cfg, lhs, rhs) is not None


def oracle_config(presentation: Presentation, algebra: Optional[Algebra] = None,
                  constants: Sequence = (), **kwargs) -> OracleConfig:
    return OracleConfig(presentation, algebra=algebra, constants=tuple(constants), **kwargs)
