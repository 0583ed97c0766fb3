"""
Independent derivation checker.

The checker recomputes the equation proved by a derivation bottom-up and
compares it with the claimed goal. It shares no code with the normalisers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from ..core.algebra import Algebra
from ..core.errors import ArityMismatch, EndpointMismatch, MissingAlgebra, SignatureMismatch
from ..core.presentation import Presentation
from ..core.term import App, ExtTerm, Sta, Var, substitute, validate_term
from .derivation import ByAxiom, Cong, Derivation, EvalStep, Refl, Sym, Trans


@dataclass(frozen=True)
class CheckContext:
    presentation: Presentation
    support: int
    algebra: Optional[Algebra] = None

    def __post_init__(self):
        if self.algebra is not None and self.algebra.signature != self.presentation.signature:
            raise SignatureMismatch(self.algebra.signature, self.presentation.signature)

    def validate(self, t: ExtTerm, seen: Optional[dict] = None):
        """
        Well-formedness in this context; Sta leaves need an algebra. ``seen``
        maps id(term) -> term for nodes already validated during one check and
        holds the term so the id stays valid.
        """
        if seen is not None and id(t) in seen:
            return
        if isinstance(t, Sta):
            if self.algebra is None:
                raise MissingAlgebra()
        elif isinstance(t, App):
            arity = self.presentation.signature.arity(t.op)
            if arity != len(t.args):
                raise ArityMismatch(t.op, arity, len(t.args))
            for a in t.args:
                self.validate(a, seen)
        else:
            validate_term(self.presentation.signature, self.support, t)
        if seen is not None:
            seen[id(t)] = t

    def same(self, a: ExtTerm, b: ExtTerm) -> bool:
        return terms_equal(a, b, self.algebra.eq if self.algebra is not None else None)


def terms_equal(a: ExtTerm, b: ExtTerm, eq=None) -> bool:
    """Syntactic equality, comparing Sta literals with ``eq``."""
    if a is b or a == b:
        return True
    if isinstance(a, Var):
        return isinstance(b, Var) and a.index == b.index
    if isinstance(a, Sta):
        if not isinstance(b, Sta):
            return False
        return eq(a.value, b.value) if eq is not None else a.value == b.value
    if not isinstance(b, App) or a.op != b.op or len(a.args) != len(b.args):
        return False
    return all(terms_equal(x, y, eq) for x, y in zip(a.args, b.args))


def endpoints(ctx: CheckContext, d: Derivation, memo: Optional[dict] = None) -> Tuple[ExtTerm, ExtTerm]:
    """
    The equation proved by ``d``. ``memo``, when given, caches results by node
    identity for callers that revisit subderivations.
    """
    return _endpoints(ctx, d, memo, {})


def _endpoints(ctx, d, memo, seen):
    if memo is None:
        return _step(ctx, d, memo, seen)
    key = id(d)
    if key not in memo:
        memo[key] = _step(ctx, d, memo, seen)
    return memo[key]


def _step(ctx, d, memo, seen):
    if isinstance(d, Refl):
        ctx.validate(d.term, seen)
        return d.term, d.term
    if isinstance(d, Sym):
        lhs, rhs = _endpoints(ctx, d.proof, memo, seen)
        return rhs, lhs
    if isinstance(d, Trans):
        lhs, mid = _endpoints(ctx, d.left, memo, seen)
        mid2, rhs = _endpoints(ctx, d.right, memo, seen)
        if not ctx.same(mid, mid2):
            raise EndpointMismatch(mid, mid2)
        return lhs, rhs
    if isinstance(d, Cong):
        arity = ctx.presentation.signature.arity(d.op)
        if arity != len(d.proofs):
            raise ArityMismatch(d.op, arity, len(d.proofs))
        ends = [_endpoints(ctx, p, memo, seen) for p in d.proofs]
        return App(d.op, tuple(e[0] for e in ends)), App(d.op, tuple(e[1] for e in ends))
    if isinstance(d, ByAxiom):
        axiom = ctx.presentation.axiom(d.name)
        if len(d.sub) != axiom.support:
            raise ArityMismatch(d.name, axiom.support, len(d.sub))
        for t in d.sub:
            ctx.validate(t, seen)
        return substitute(axiom.lhs, d.sub), substitute(axiom.rhs, d.sub)
    if isinstance(d, EvalStep):
        if ctx.algebra is None:
            raise MissingAlgebra()
        value = ctx.algebra.apply(d.op, *d.consts)
        return App(d.op, tuple(Sta(c) for c in d.consts)), Sta(value)
    raise TypeError(f'not a derivation: {d!r}')


def check(ctx: CheckContext, lhs: ExtTerm, rhs: ExtTerm, d: Derivation):
    """Raise unless ``d`` proves ``lhs = rhs`` in the context."""
    seen = {}
    ctx.validate(lhs, seen)
    ctx.validate(rhs, seen)
    got_lhs, got_rhs = _endpoints(ctx, d, None, seen)
    if not ctx.same(lhs, got_lhs):
        raise EndpointMismatch(lhs, got_lhs)
    if not ctx.same(rhs, got_rhs):
        raise EndpointMismatch(rhs, got_rhs)
