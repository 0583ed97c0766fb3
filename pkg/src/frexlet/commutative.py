"""
Free commutative monoid (coefficient vectors) and its free extension (a
constant plus a coefficient vector), with the commutative-monoid coproduct.

Canonical terms list the constant first, then every variable repeated
coefficient-many times in ascending index order, right-nested.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence, Tuple

import numpy as np

from ..core.algebra import Algebra
from ..core.errors import SignatureMismatch, VarOutOfScope
from ..core.term import App, ExtTerm, Sta, Var, positions, substitute
from ..proof.derivation import ByAxiom, Derivation, EvalStep, Refl, cong, instantiate, sym, trans
from ..zoo.presentation import MONOID_SIGNATURE, MUL, UNIT, cmonoid
from .api import CoproductConstruction, Fral, Frex
from .monoid import UNIT_TERM, ListProver, _leaves

CoeffVec = Tuple[int, ...]


@dataclass(frozen=True)
class LinPoly:
    const: Any
    coeffs: CoeffVec

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, 'coeffs', tuple(int(k) for k in self.coeffs))


def _key(item) -> int:
    return -1 if isinstance(item, Sta) else item.index


class CommutativeProver(ListProver):
    """Sorted insertion with commutativity steps; constants sort first and fold."""

    def combine(self, a, b, ra, rb):
        return self.merge(a, b, ra, rb)

    def merge(self, a, b, ra, rb):
        """Prove ra · rb = reify(sorted(a ++ b)) for sorted a, b."""
        if not a:
            return b, ByAxiom('lftNeutrality', (rb,)), rb
        if not b:
            return a, ByAxiom('rgtNeutrality', (ra,)), ra
        if len(a) == 1:
            return self.insert(a[0], b, ra, rb)

        tx, rr = ra.args
        reassoc = ByAxiom('assoc', (tx, rr, rb))
        # a[1:] holds at least one variable, so the merge is never empty
        m, p, rm = self.merge(a[1:], b, rr, rb)
        m2, p2, rm2 = self.insert(a[0], m, tx, rm)
        return m2, trans(reassoc, cong(MUL, (Refl(tx), p)), p2), rm2

    def insert(self, x, b, tx, rb):
        """Prove tx · rb = reify(items) for non-empty sorted b."""
        y = b[0]
        if isinstance(x, Sta) and isinstance(y, Sta):
            return self.fold(x, b, rb)
        if _key(x) <= _key(y):
            t = App(MUL, (tx, rb))
            return (x,) + tuple(b), Refl(t), t

        if len(b) == 1:
            t = App(MUL, (rb, tx))
            return (y, x), ByAxiom('comm', (tx, rb)), t
        ty, r = rb.args
        m, p, rm = self.insert(x, b[1:], tx, r)
        return (y,) + tuple(m), trans(
            sym(ByAxiom('assoc', (tx, ty, r))),
            cong(MUL, (ByAxiom('comm', (tx, ty)), Refl(r))),
            ByAxiom('assoc', (ty, tx, r)),
            cong(MUL, (Refl(ty), p))), App(MUL, (ty, rm))


def _count(t: ExtTerm, support: int) -> np.ndarray:
    coeffs = np.zeros(support, dtype=np.int64)
    for leaf in _leaves(t, []):
        if isinstance(leaf, Var):
            if leaf.index >= support:
                raise VarOutOfScope(leaf.index, support)
            coeffs[leaf.index] += 1
    return coeffs


def _var_items(coeffs: Sequence[int]):
    return tuple(Var(i) for i, k in enumerate(coeffs) for _ in range(int(k)))


def scale(target: Algebra, value, k: int):
    """k-fold product of ``value``; the unit for k = 0."""
    result = target.constant(UNIT)
    for _ in range(k):
        result = target.apply(MUL, result, value)
    return result


def eval_linpoly(target: Algebra, h: Callable, env: Sequence, const, coeffs: Sequence[int]):
    result = h(const)
    for i, k in enumerate(coeffs):
        if k:
            result = target.apply(MUL, result, scale(target, env[i], int(k)))
    return result


def vectors(support: int) -> Algebra:
    def add(a, b):
        return tuple((np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)).tolist())

    return Algebra(
        name=f'vectors-{support}',
        signature=MONOID_SIGNATURE,
        interp={MUL: add, UNIT: lambda: (0,) * support},
        show=lambda v: '[' + ','.join(map(str, v)) + ']',
        encode=list,
        decode=tuple,
        sample=lambda rng: tuple(int(k) for k in rng.integers(0, 4, size=support)),
        models=('monoid', 'cmonoid'))


class CommutativeFral(Fral):
    def __init__(self):
        self.presentation = cmonoid()
        self._prover = CommutativeProver()

    def norm(self, t: ExtTerm, support: int = 0) -> CoeffVec:
        return tuple(int(k) for k in _count(t, support))

    def reify(self, nf: CoeffVec) -> ExtTerm:
        return self._prover.reify(_var_items(nf))

    def prove_norm(self, t: ExtTerm, support: int = 0) -> Derivation:
        return self._prover.prove(t)[1]

    def nf_algebra(self, support: int) -> Algebra:
        return vectors(support)


class CommutativeFrex(Frex):
    def __init__(self, base: Algebra):
        self.presentation = cmonoid()
        self.base = base
        self._prover = CommutativeProver(base)

    def norm(self, t: ExtTerm, support: int = 0) -> LinPoly:
        const = self.base.constant(UNIT)
        for leaf in _leaves(t, []):
            if isinstance(leaf, Sta):
                const = self.base.apply(MUL, const, leaf.value)
        return LinPoly(const, tuple(int(k) for k in _count(t, support)))

    def reify(self, nf: LinPoly) -> ExtTerm:
        items = _var_items(nf.coeffs)
        if not (self._prover.is_unit(nf.const) and items):
            items = (Sta(nf.const),) + items
        return self._prover.reify(items)

    def prove_norm(self, t: ExtTerm, support: int = 0) -> Derivation:
        items, p, _ = self._prover.prove(t)
        if not items:
            # all constants cancelled: 1 = Sta(unit)
            return trans(p, EvalStep(UNIT, ()))
        return p

    def nf_eq(self, a: LinPoly, b: LinPoly) -> bool:
        return self.base.eq(a.const, b.const) and a.coeffs == b.coeffs

    def var(self, index: int, support: int = 0) -> LinPoly:
        return self.norm(Var(index), support)

    def embed(self, value, support: int = 0) -> LinPoly:
        return LinPoly(value, (0,) * support)

    def eval_nf(self, target: Algebra, h: Callable, env: Sequence, nf: LinPoly):
        return eval_linpoly(target, h, env, nf.const, nf.coeffs)


def coproduct_cm(a: Algebra, b: Algebra) -> Algebra:
    """Pairs with componentwise operations: the coproduct of commutative monoids."""
    if a.signature != b.signature:
        raise SignatureMismatch(a.signature, b.signature)

    def componentwise(op):
        def f(*args):
            return (a.apply(op, *[x[0] for x in args]), b.apply(op, *[x[1] for x in args]))
        return f

    sample = None
    if a.sample is not None and b.sample is not None:
        sample = lambda rng: (a.sample(rng), b.sample(rng))  # noqa: E731

    return Algebra(
        name=f'{a.name}+{b.name}',
        signature=a.signature,
        interp={op: componentwise(op) for op in a.signature.ops},
        eq=lambda x, y: a.eq(x[0], y[0]) and b.eq(x[1], y[1]),
        show=lambda x: f'({a.show(x[0])}, {b.show(x[1])})',
        encode=lambda x: [a.encode(x[0]), b.encode(x[1])],
        decode=lambda v: (a.decode(v[0]), b.decode(v[1])),
        sample=sample,
        notation=a.notation,
        models=tuple(m for m in a.models if m in b.models))


def inl(a: Algebra, b: Algebra, value):
    return value, b.constant(UNIT)


def inr(a: Algebra, b: Algebra, value):
    return a.constant(UNIT), value


class CommutativeCoproduct(CoproductConstruction):
    """Coproduct of a base algebra with coefficient vectors."""

    def algebra(self, base, nf_algebra):
        return coproduct_cm(base, nf_algebra)

    def inl(self, base, nf_algebra, value):
        return inl(base, nf_algebra, value)

    def inr(self, base, nf_algebra, nf):
        return inr(base, nf_algebra, nf)

    def reify(self, base, fral, element):
        c, v = element
        if not any(v):
            return Sta(c)
        if base.eq(c, base.constant(UNIT)):
            return fral.reify(v)
        return App(MUL, (Sta(c), fral.reify(v)))

    def prove_norm(self, base, fral, t, support):
        # constants become fresh variables below every real one, so the fral sorts them first
        m = sum(isinstance(s, Sta) for _, s in positions(t))
        consts = []
        u = _abstract_constants(t, m, consts)
        back = tuple(consts) + tuple(Var(i) for i in range(support))
        p = instantiate(fral.prove_norm(u, m + support), back)
        values, tail = _split_constants(substitute(fral.reify(fral.norm(u, m + support)), back))

        if not values:
            if tail == UNIT_TERM:
                return trans(p, EvalStep(UNIT, ()))
            return p
        folded, value = _fold_constants(base, values, tail)
        if tail is None or not base.eq(value, base.constant(UNIT)):
            return trans(p, folded)
        return trans(p, folded,
                     cong(MUL, (sym(EvalStep(UNIT, ())), Refl(tail))),
                     ByAxiom('lftNeutrality', (tail,)))

    def eliminate(self, target, h, env, element):
        return eval_linpoly(target, h, env, element[0], element[1])


def _abstract_constants(t: ExtTerm, shift: int, consts: list) -> ExtTerm:
    if isinstance(t, Sta):
        consts.append(t)
        return Var(len(consts) - 1)
    if isinstance(t, Var):
        return Var(t.index + shift)
    if not t.args:
        return t
    return App(t.op, tuple(_abstract_constants(a, shift, consts) for a in t.args))


def _split_constants(r: ExtTerm):
    """Leading constants of a right-nested product, and what follows them (None if nothing)."""
    values = []
    while isinstance(r, App) and r.op == MUL and isinstance(r.args[0], Sta):
        values.append(r.args[0].value)
        r = r.args[1]
    if isinstance(r, Sta):
        values.append(r.value)
        r = None
    return values, r


def _fold_constants(base: Algebra, values, tail):
    """Prove c1 · (c2 · (... · tail)) = Sta(c1 · c2 · ...) · tail; returns (proof, product)."""
    c = values[0]
    if len(values) == 1:
        t = Sta(c) if tail is None else App(MUL, (Sta(c), tail))
        return Refl(t), c
    inner, rest = _fold_constants(base, values[1:], tail)
    value = base.apply(MUL, c, rest)
    head = cong(MUL, (Refl(Sta(c)), inner))
    if tail is None:
        return trans(head, EvalStep(MUL, (c, rest))), value
    return trans(head,
                 sym(ByAxiom('assoc', (Sta(c), Sta(rest), tail))),
                 cong(MUL, (EvalStep(MUL, (c, rest)), Refl(tail)))), value


# functional shorthands

def cnorm_fral(t: ExtTerm, support: int) -> CoeffVec:
    return CommutativeFral().norm(t, support)


def cnorm_frex(base: Algebra, t: ExtTerm, support: int) -> LinPoly:
    return CommutativeFrex(base).norm(t, support)


def creify(nf, base: Optional[Algebra] = None) -> ExtTerm:
    if isinstance(nf, LinPoly):
        return CommutativeFrex(base).reify(nf)
    return CommutativeFral().reify(tuple(nf))


def cprove_norm(t: ExtTerm, support: int, base: Optional[Algebra] = None) -> Derivation:
    if base is None:
        return CommutativeFral().prove_norm(t, support)
    return CommutativeFrex(base).prove_norm(t, support)
