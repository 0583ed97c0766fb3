"""
Linear derivations: type-aligned lists of directed atomic steps, each applied
under a unary congruence context (a term with exactly one hole).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from ..core.errors import AlignmentError, CheckFailed, FrexError
from ..core.term import App, ExtTerm, replace_at
from .checker import CheckContext, endpoints
from .derivation import Atomic, ByAxiom, Cong, Derivation, EvalStep, Refl, Sym, Trans, trans


@dataclass(frozen=True)
class Hole:
    def __str__(self):
        return '□'


HOLE = Hole()


class Direction(Enum):
    FWD = 'fwd'
    BWD = 'bwd'

    def flip(self):
        return Direction.BWD if self is Direction.FWD else Direction.FWD


@dataclass(frozen=True)
class LinStep:
    focus: Optional[ExtTerm]
    direction: Direction
    by: Atomic
    # position of the hole in focus, when the producer knows it
    path: Optional[Tuple[int, ...]] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class LinearDerivation:
    start: ExtTerm
    steps: Tuple[LinStep, ...] = ()

    def __post_init__(self):
        if not isinstance(self.steps, tuple):
            object.__setattr__(self, 'steps', tuple(self.steps))

    def __len__(self):
        return len(self.steps)


def hole_path(t, path: Tuple[int, ...] = ()) -> Optional[Tuple[int, ...]]:
    """Position of the first hole in ``t``, or None."""
    if isinstance(t, Hole):
        return path
    if isinstance(t, App):
        for i, a in enumerate(t.args):
            found = hole_path(a, path + (i,))
            if found is not None:
                return found
    return None


def plug(context: Optional[ExtTerm], t: ExtTerm, path: Optional[Tuple[int, ...]] = None) -> ExtTerm:
    if context is None or isinstance(context, Hole):
        return t
    if path is None:
        path = hole_path(context)
        if path is None:
            return context
    return replace_at(context, path, t)


def count_holes(t) -> int:
    if isinstance(t, Hole):
        return 1
    if isinstance(t, App):
        return sum(count_holes(a) for a in t.args)
    return 0


def step_endpoints(ctx: CheckContext, step: LinStep) -> Tuple[ExtTerm, ExtTerm]:
    path = step.path
    if step.focus is not None and path is None:
        if count_holes(step.focus) != 1:
            raise ValueError('a step context must contain exactly one hole')
        path = hole_path(step.focus)
    lhs, rhs = endpoints(ctx, step.by)
    if step.direction is Direction.BWD:
        lhs, rhs = rhs, lhs
    return plug(step.focus, lhs, path), plug(step.focus, rhs, path)


def trace(ctx: CheckContext, lin: LinearDerivation) -> List[ExtTerm]:
    """The start term followed by the target of every step."""
    terms = [lin.start]
    for step in lin.steps:
        terms.append(step_endpoints(ctx, step)[1])
    return terms


def linearize(ctx: CheckContext, d: Derivation) -> LinearDerivation:
    """
    Flatten a derivation tree: reflexivity vanishes, transitivity concatenates,
    symmetry reverses and flips, and an n-ary congruence becomes n unary
    contexts, rewritten left to right.
    """
    memo = {}
    start, _ = endpoints(ctx, d, memo)
    out: List[LinStep] = []
    _emit(ctx, d, None, (), False, out, memo)
    return LinearDerivation(start, tuple(out))


def _emit(ctx, d, focus, path, flipped, out, memo):
    if isinstance(d, Refl):
        return
    if isinstance(d, Sym):
        _emit(ctx, d.proof, focus, path, not flipped, out, memo)
    elif isinstance(d, Trans):
        parts = (d.right, d.left) if flipped else (d.left, d.right)
        for p in parts:
            _emit(ctx, p, focus, path, flipped, out, memo)
    elif isinstance(d, Cong):
        ends = [endpoints(ctx, p, memo) for p in d.proofs]
        order = range(len(d.proofs))
        for i in (reversed(order) if flipped else order):
            if isinstance(d.proofs[i], Refl):
                continue
            args = [e[1] for e in ends[:i]] + [HOLE] + [e[0] for e in ends[i + 1:]]
            inner = App(d.op, tuple(args))
            _emit(ctx, d.proofs[i], plug(focus, inner, path), path + (i,), flipped, out, memo)
    elif isinstance(d, (ByAxiom, EvalStep)):
        out.append(LinStep(focus, Direction.BWD if flipped else Direction.FWD, d,
                           path if focus is not None else None))
    else:
        raise TypeError(f'not a derivation: {d!r}')


def remove_loops(ctx: CheckContext, lin: LinearDerivation) -> LinearDerivation:
    """
    Drop every multi-step detour that returns to an already visited term:
    from the first occurrence of a term jump to its last occurrence.
    """
    terms = trace(ctx, lin)
    last = {}
    for k, t in enumerate(terms):
        last[t] = k

    kept = []
    i = 0
    while i < len(lin.steps):
        j = last[terms[i]]
        if j > i:
            i = j
            continue
        kept.append(lin.steps[i])
        i += 1
    return LinearDerivation(lin.start, tuple(kept))


def step_derivation(step: LinStep) -> Derivation:
    d = step.by if step.direction is Direction.FWD else Sym(step.by)
    if step.focus is None:
        return d
    path = step.path if step.path is not None else hole_path(step.focus)
    return _wrap(step.focus, d, path)


def _wrap(focus, d, path):
    if not path:
        return d
    i = path[0]
    return Cong(focus.op, tuple(_wrap(a, d, path[1:]) if k == i else Refl(a)
                                for k, a in enumerate(focus.args)))


def replay(ctx: CheckContext, lin: LinearDerivation) -> Derivation:
    """Rebuild a derivation tree so that the checker stays the single judge."""
    current = lin.start
    ds = [Refl(lin.start)]
    for i, step in enumerate(lin.steps):
        try:
            source, target = step_endpoints(ctx, step)
        except (FrexError, ValueError) as e:
            raise CheckFailed(i, f'{type(e).__name__}: {e}') from e
        if not ctx.same(source, current):
            raise AlignmentError(i, current, source)
        ds.append(step_derivation(step))
        current = target
    return trans(*ds)
