"""
Involutive monoids, reduced to the monoid frexlets over polarity-tagged
variables: inversion is pushed to the leaves (reversing products, flipping
tags and applying the base involution to constants) before flattening.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from ..core.algebra import Algebra
from ..core.errors import VarOutOfScope
from ..core.term import App, ExtTerm, Sta, Var
from ..proof.derivation import ByAxiom, Derivation, EvalStep, Refl, cong, sym, trans
from ..zoo.presentation import INV, MUL, UNIT, invmonoid
from .api import Fral, Frex
from .monoid import UNIT_TERM, ListProver, items_equal, push_const


@dataclass(frozen=True)
class TaggedVar:
    index: int
    inverted: bool = False

    def flip(self):
        return TaggedVar(self.index, not self.inverted)

    def __str__(self):
        return f'x{self.index}' + ('′' if self.inverted else '')


InvWord = Tuple[TaggedVar, ...]


class InvolutiveProver(ListProver):

    def term(self, item) -> ExtTerm:
        if isinstance(item, TaggedVar):
            v = Var(item.index)
            return App(INV, (v,)) if item.inverted else v
        return item

    def leaf(self, t: Var):
        return (TaggedVar(t.index),), Refl(t), t

    def prove(self, t: ExtTerm):
        if isinstance(t, App) and t.op == INV:
            a, pa, ra = self.prove(t.args[0])
            items, pi, ri = self.invert(a, ra)
            return items, trans(cong(INV, (pa,)), pi), ri
        return super().prove(t)

    def invert(self, a, ra):
        """Prove inv(ra) = reify(items) where items is the inverse list."""
        if not a:
            return (), inv_unit_proof(), UNIT_TERM
        if len(a) == 1:
            x = a[0]
            if isinstance(x, TaggedVar):
                f = x.flip()
                tf = self.term(f)
                if x.inverted:
                    return (f,), ByAxiom('involutivity', (tf,)), tf
                return (f,), Refl(tf), tf
            c = self.base.apply(INV, x.value)
            ev = EvalStep(INV, (x.value,))
            if self.is_unit(c):
                return (), trans(ev, sym(EvalStep(UNIT, ()))), UNIT_TERM
            s = Sta(c)
            return (s,), ev, s

        tx, rr = ra.args
        split = ByAxiom('antidistributivity', (tx, rr))
        ir, pr, rir = self.invert(a[1:], rr)
        ix, px, rix = self.invert(a[:1], tx)
        items, pc, rc = self.concat(ir, ix, rir, rix)
        return items, trans(split, cong(MUL, (pr, px)), pc), rc


def inv_unit_proof() -> Derivation:
    """inv(1) = 1, from neutrality, involutivity and antidistributivity."""
    iu = App(INV, (UNIT_TERM,))
    return trans(
        sym(ByAxiom('rgtNeutrality', (iu,))),
        cong(MUL, (Refl(iu), sym(ByAxiom('involutivity', (UNIT_TERM,))))),
        sym(ByAxiom('antidistributivity', (iu, UNIT_TERM))),
        cong(INV, (ByAxiom('rgtNeutrality', (iu,)),)),
        ByAxiom('involutivity', (UNIT_TERM,)))


def _walk(base: Optional[Algebra], t: ExtTerm, inverted: bool, out: list, support: Optional[int]):
    if isinstance(t, Var):
        if support is not None and t.index >= support:
            raise VarOutOfScope(t.index, support)
        out.append(TaggedVar(t.index, inverted))
    elif isinstance(t, Sta):
        push_const(base, out, base.apply(INV, t.value) if inverted else t.value)
    elif t.op == INV:
        _walk(base, t.args[0], not inverted, out, support)
    elif t.op == MUL:
        for a in (reversed(t.args) if inverted else t.args):
            _walk(base, a, inverted, out, support)
    return out


def inv_nf(nf: Sequence, base: Optional[Algebra] = None) -> tuple:
    """Reverse, flip every tag and invert every constant."""
    out = []
    for item in reversed(nf):
        if isinstance(item, TaggedVar):
            out.append(item.flip())
        else:
            push_const(base, out, base.apply(INV, item.value))
    return tuple(out)


class InvolutiveFral(Fral):
    def __init__(self):
        self.presentation = invmonoid()
        self._prover = InvolutiveProver()

    def norm(self, t: ExtTerm, support: int = 0) -> InvWord:
        return tuple(_walk(None, t, False, [], None))

    def reify(self, nf: InvWord) -> ExtTerm:
        return self._prover.reify(nf)

    def prove_norm(self, t: ExtTerm, support: int = 0) -> Derivation:
        return self._prover.prove(t)[1]


class InvolutiveFrex(Frex):
    def __init__(self, base: Algebra):
        self.presentation = invmonoid()
        self.base = base
        self._prover = InvolutiveProver(base)

    def norm(self, t: ExtTerm, support: int = 0):
        return tuple(_walk(self.base, t, False, [], None))

    def reify(self, nf) -> ExtTerm:
        return self._prover.reify(nf)

    def prove_norm(self, t: ExtTerm, support: int = 0) -> Derivation:
        return self._prover.prove(t)[1]

    def nf_eq(self, a, b) -> bool:
        return items_equal(self.base, a, b)

    def var(self, index: int, support: int = 0):
        return (TaggedVar(index),)

    def embed(self, value, support: int = 0):
        return self.norm(Sta(value))

    def eval_nf(self, target: Algebra, h: Callable, env: Sequence, nf):
        result = None
        for item in nf:
            if isinstance(item, Sta):
                v = h(item.value)
            else:
                v = env[item.index]
                if item.inverted:
                    v = target.apply(INV, v)
            result = v if result is None else target.apply(MUL, result, v)
        return target.constant(UNIT) if result is None else result


# functional shorthands

def inorm_fral(t: ExtTerm) -> InvWord:
    return InvolutiveFral().norm(t)


def inorm_frex(base: Algebra, t: ExtTerm):
    return InvolutiveFrex(base).norm(t)


def iprove_norm(t: ExtTerm, base: Optional[Algebra] = None) -> Derivation:
    return InvolutiveProver(base).prove(t)[1]
