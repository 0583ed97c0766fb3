"""
Free monoid (words of variables) and free monoid extension (alternating
lists of constants and variables).

An ``AltList`` is a tuple of ``Var`` and ``Sta`` items with no unit constant
and no two adjacent constants; adjacent variables are allowed. Normal forms
reify right-nested, the empty list reifying to the unit.
"""

from __future__ import annotations

import operator
from typing import Any, Callable, Optional, Sequence, Tuple

from ..core.algebra import Algebra
from ..core.term import App, ExtTerm, Sta, Var
from ..proof.derivation import ByAxiom, Derivation, EvalStep, Refl, cong, sym, trans
from ..zoo.presentation import MONOID_SIGNATURE, MUL, UNIT, monoid
from .api import Fral, Frex

Word = Tuple[int, ...]
AltList = Tuple[Any, ...]

UNIT_TERM = App(UNIT)


class ListProver(object):
    """
    Builds ``t = reify(items)`` derivations while flattening products.

    Items are ``Sta`` constants or variable-like items turned into terms by
    ``term``; subclasses decide how two normal lists combine. Every step
    returns (items, proof, reify(items)) so that suffix terms are shared
    instead of rebuilt.
    """

    def __init__(self, base: Optional[Algebra] = None):
        self.base = base
        self._unit_value = base.constant(UNIT) if base is not None else None

    def term(self, item) -> ExtTerm:
        return item

    def is_unit(self, c) -> bool:
        return self.base.eq(c, self._unit_value)

    def reify(self, items: Sequence) -> ExtTerm:
        if not items:
            return UNIT_TERM
        t = self.term(items[-1])
        for item in reversed(items[:-1]):
            t = App(MUL, (self.term(item), t))
        return t

    def leaf(self, t: Var):
        return (t,), Refl(t), t

    def const_leaf(self, c):
        if self.is_unit(c):
            return (), sym(EvalStep(UNIT, ())), UNIT_TERM
        s = Sta(c)
        return (s,), Refl(s), s

    def prove(self, t: ExtTerm):
        """Return (items, proof of t = reify(items), reify(items))."""
        if isinstance(t, Var):
            return self.leaf(t)
        if isinstance(t, Sta):
            return self.const_leaf(t.value)
        if t.op == UNIT:
            return (), Refl(t), t
        if t.op == MUL:
            a, pa, ra = self.prove(t.args[0])
            b, pb, rb = self.prove(t.args[1])
            items, pc, rc = self.combine(a, b, ra, rb)
            return items, trans(cong(MUL, (pa, pb)), pc), rc
        raise ValueError(f'unexpected operation {t.op!r}')

    def combine(self, a, b, ra, rb):
        return self.concat(a, b, ra, rb)

    def concat(self, a, b, ra, rb):
        """Prove ra · rb = reify(a ++ b), folding constants at the seam."""
        if not a:
            return b, ByAxiom('lftNeutrality', (rb,)), rb
        if not b:
            return a, ByAxiom('rgtNeutrality', (ra,)), ra
        x = a[0]
        if len(a) == 1:
            if isinstance(x, Sta) and isinstance(b[0], Sta):
                return self.fold(x, b, rb)
            t = App(MUL, (ra, rb))
            return (x,) + tuple(b), Refl(t), t

        tx, rr = ra.args
        reassoc = ByAxiom('assoc', (tx, rr, rb))
        merged, p, rm = self.concat(a[1:], b, rr, rb)
        inner = cong(MUL, (Refl(tx), p))
        if not merged:
            return (x,), trans(reassoc, inner, ByAxiom('rgtNeutrality', (tx,))), tx
        return (x,) + tuple(merged), trans(reassoc, inner), App(MUL, (tx, rm))

    def fold(self, x: Sta, b, rb):
        """Multiply the constant ``x`` into the leading constant of ``b``."""
        c1, c2 = x.value, b[0].value
        product = self.base.apply(MUL, c1, c2)
        ev = EvalStep(MUL, (c1, c2))
        if len(b) == 1:
            if self.is_unit(product):
                return (), trans(ev, sym(EvalStep(UNIT, ()))), UNIT_TERM
            s = Sta(product)
            return (s,), ev, s

        rest = tuple(b[1:])
        head, r = rb.args
        steps = [sym(ByAxiom('assoc', (x, head, r))), cong(MUL, (ev, Refl(r)))]
        if self.is_unit(product):
            steps += [cong(MUL, (sym(EvalStep(UNIT, ())), Refl(r))), ByAxiom('lftNeutrality', (r,))]
            return rest, trans(*steps), r
        s = Sta(product)
        return (s,) + rest, trans(*steps), App(MUL, (s, r))


def _leaves(t: ExtTerm, out: list):
    if isinstance(t, App):
        for a in t.args:
            _leaves(a, out)
    else:
        out.append(t)
    return out


def push_const(base: Algebra, out: list, c):
    """Append a constant to a canonical list, folding and dropping units."""
    unit = base.constant(UNIT)
    if base.eq(c, unit):
        return
    if out and isinstance(out[-1], Sta):
        product = base.apply(MUL, out.pop().value, c)
        if not base.eq(product, unit):
            out.append(Sta(product))
    else:
        out.append(Sta(c))


def items_equal(base: Optional[Algebra], a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    for x, y in zip(a, b):
        if isinstance(x, Sta):
            if not isinstance(y, Sta) or not base.eq(x.value, y.value):
                return False
        elif x != y:
            return False
    return True


def words():
    return Algebra(
        name='words',
        signature=MONOID_SIGNATURE,
        interp={MUL: operator.add, UNIT: lambda: ()},
        show=lambda w: ''.join(f'x{i}' for i in w) or 'ε',
        encode=list,
        decode=tuple,
        models=('monoid',))


class MonoidFral(Fral):
    def __init__(self):
        self.presentation = monoid()
        self._prover = ListProver()

    def norm(self, t: ExtTerm, support: int = 0) -> Word:
        return tuple(leaf.index for leaf in _leaves(t, []))

    def reify(self, nf: Word) -> ExtTerm:
        return self._prover.reify(tuple(Var(i) for i in nf))

    def prove_norm(self, t: ExtTerm, support: int = 0) -> Derivation:
        return self._prover.prove(t)[1]

    def nf_algebra(self, support: int) -> Algebra:
        return words()


class MonoidFrex(Frex):
    def __init__(self, base: Algebra):
        self.presentation = monoid()
        self.base = base
        self._prover = ListProver(base)

    def norm(self, t: ExtTerm, support: int = 0) -> AltList:
        out = []
        for leaf in _leaves(t, []):
            if isinstance(leaf, Var):
                out.append(leaf)
            elif isinstance(leaf, Sta):
                push_const(self.base, out, leaf.value)
        return tuple(out)

    def reify(self, nf: AltList) -> ExtTerm:
        return self._prover.reify(nf)

    def prove_norm(self, t: ExtTerm, support: int = 0) -> Derivation:
        return self._prover.prove(t)[1]

    def nf_eq(self, a, b) -> bool:
        return items_equal(self.base, a, b)

    def var(self, index: int, support: int = 0) -> AltList:
        return (Var(index),)

    def embed(self, value, support: int = 0) -> AltList:
        return self.norm(Sta(value))

    def eval_nf(self, target: Algebra, h: Callable, env: Sequence, nf: AltList):
        result = None
        for item in nf:
            v = h(item.value) if isinstance(item, Sta) else env[item.index]
            result = v if result is None else target.apply(MUL, result, v)
        return target.constant(UNIT) if result is None else result


# functional shorthands

def mnorm_fral(t: ExtTerm) -> Word:
    return MonoidFral().norm(t)


def mnorm_frex(base: Algebra, t: ExtTerm) -> AltList:
    return MonoidFrex(base).norm(t)


def mreify(nf) -> ExtTerm:
    return ListProver().reify(tuple(Var(i) if isinstance(i, int) else i for i in nf))


def mprove_norm(t: ExtTerm, base: Optional[Algebra] = None) -> Derivation:
    return ListProver(base).prove(t)[1]
