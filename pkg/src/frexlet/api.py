"""
Fral / frex contracts, the top-level solvers and the generic combinators.

A fral normalises plain terms; a frex normalises extended terms over a base
algebra. Both return a derivation of ``t = reify(norm(t))`` on demand, so a
solver only has to compare normal forms and glue two proofs together.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence

from ..core.algebra import Algebra
from ..core.errors import NoCoproductRegistered, StaticInFralGoal
from ..core.presentation import Presentation
from ..core.term import App, ExtTerm, Goal, Sta, Var
from ..proof.checker import CheckContext
from ..proof.derivation import ByAxiom, Cong, Derivation, EvalStep, Refl, Sym, Trans, sym, trans

__all__ = ['Fral', 'Frex', 'solve_fral', 'solve_frex', 'by_frex', 'frex_by_coproduct', 'power',
           'InitialAlgebra', 'CoproductConstruction']


class Fral(ABC):
    presentation: Presentation

    @abstractmethod
    def norm(self, t: ExtTerm, support: int = 0):
        raise NotImplementedError

    @abstractmethod
    def reify(self, nf) -> ExtTerm:
        raise NotImplementedError

    @abstractmethod
    def prove_norm(self, t: ExtTerm, support: int = 0) -> Derivation:
        """A derivation of ``t = reify(norm(t))``."""
        raise NotImplementedError

    def nf_eq(self, a, b) -> bool:
        return a == b

    def nf_algebra(self, support: int) -> Algebra:
        """Normal forms over ``support`` variables as an algebra of the presentation."""
        raise NotImplementedError(f'{type(self).__name__} has no normal-form algebra')

    def check_context(self, support: int) -> CheckContext:
        return CheckContext(self.presentation, support)


class Frex(ABC):
    presentation: Presentation
    base: Algebra

    @abstractmethod
    def norm(self, t: ExtTerm, support: int = 0):
        raise NotImplementedError

    @abstractmethod
    def reify(self, nf) -> ExtTerm:
        raise NotImplementedError

    @abstractmethod
    def prove_norm(self, t: ExtTerm, support: int = 0) -> Derivation:
        raise NotImplementedError

    @abstractmethod
    def var(self, index: int, support: int = 0):
        raise NotImplementedError

    @abstractmethod
    def embed(self, value, support: int = 0):
        raise NotImplementedError

    @abstractmethod
    def eval_nf(self, target: Algebra, h: Callable[[Any], Any], env: Sequence[Any], nf):
        """The eliminator [h;e]: the unique extension of ``h`` and ``env`` to normal forms."""
        raise NotImplementedError

    def nf_eq(self, a, b) -> bool:
        return a == b

    def check_context(self, support: int) -> CheckContext:
        return CheckContext(self.presentation, support, self.base)


def _solve(f, g: Goal) -> Optional[Derivation]:
    n = g.support
    if not f.nf_eq(f.norm(g.lhs, n), f.norm(g.rhs, n)):
        return None
    return trans(f.prove_norm(g.lhs, n), sym(f.prove_norm(g.rhs, n)))


def solve_fral(f: Fral, g: Goal) -> Optional[Derivation]:
    """A derivation of ``g``, or None when the normal forms differ."""
    g.validate(f.presentation.signature)
    if not g.is_static_free:
        raise StaticInFralGoal()
    return _solve(f, g)


def solve_frex(f: Frex, g: Goal) -> Optional[Derivation]:
    g.validate(f.presentation.signature)
    return _solve(f, g)


# by_frex: a fral from a frex over the initial algebra

@dataclass(frozen=True)
class InitialAlgebra:
    """
    algebra: the initial algebra of a presentation
    name_of: a closed term denoting a carrier value
    eval_proof: (op, values) -> derivation of op(name_of(v1), ...) = name_of(op(v1, ...))
    """
    algebra: Algebra
    name_of: Callable[[Any], ExtTerm]
    eval_proof: Callable[[str, Sequence[Any]], Derivation]

    def erase(self, t: ExtTerm) -> ExtTerm:
        if isinstance(t, Sta):
            return self.name_of(t.value)
        if isinstance(t, App) and t.args:
            return App(t.op, tuple(self.erase(a) for a in t.args))
        return t

    def erase_proof(self, d: Derivation) -> Derivation:
        if isinstance(d, Refl):
            return Refl(self.erase(d.term))
        if isinstance(d, Sym):
            return Sym(self.erase_proof(d.proof))
        if isinstance(d, Trans):
            return Trans(self.erase_proof(d.left), self.erase_proof(d.right))
        if isinstance(d, Cong):
            return Cong(d.op, tuple(self.erase_proof(p) for p in d.proofs))
        if isinstance(d, ByAxiom):
            return ByAxiom(d.name, tuple(self.erase(t) for t in d.sub))
        if isinstance(d, EvalStep):
            return self.eval_proof(d.op, d.consts)
        raise TypeError(f'not a derivation: {d!r}')


class ByFrex(Fral):
    def __init__(self, frex: Frex, initial: InitialAlgebra):
        self.frex = frex
        self.initial = initial
        self.presentation = frex.presentation

    def norm(self, t, support=0):
        return self.frex.norm(t, support)

    def reify(self, nf):
        return self.initial.erase(self.frex.reify(nf))

    def prove_norm(self, t, support=0):
        return self.initial.erase_proof(self.frex.prove_norm(t, support))

    def nf_eq(self, a, b):
        return self.frex.nf_eq(a, b)


def by_frex(frex: Frex, initial: Optional[InitialAlgebra] = None) -> Fral:
    """
    Derive a fral from a frex over the presentation's initial algebra. Constants
    introduced by the frex are replaced by closed terms, so proofs stay Sta-free.
    """
    if initial is None:
        from ..zoo.initial import get_initial
        initial = get_initial(frex.presentation.name)
    if initial.algebra.name != frex.base.name:
        raise ValueError(f'{frex.base.name} is not the initial algebra {initial.algebra.name}')
    return ByFrex(frex, initial)


# frex_by_coproduct: the frex of A by X is the coproduct of A with the fral on X

class CoproductConstruction(ABC):
    @abstractmethod
    def algebra(self, base: Algebra, nf_algebra: Algebra) -> Algebra:
        raise NotImplementedError

    @abstractmethod
    def inl(self, base: Algebra, nf_algebra: Algebra, value):
        raise NotImplementedError

    @abstractmethod
    def inr(self, base: Algebra, nf_algebra: Algebra, nf):
        raise NotImplementedError

    @abstractmethod
    def reify(self, base: Algebra, fral: Fral, element) -> ExtTerm:
        raise NotImplementedError

    @abstractmethod
    def prove_norm(self, base: Algebra, fral: Fral, t: ExtTerm, support: int) -> Derivation:
        """A derivation of ``t = reify(norm(t))`` for the pair normal form, built from ``fral``'s proofs."""
        raise NotImplementedError

    @abstractmethod
    def eliminate(self, target: Algebra, h, env, element):
        raise NotImplementedError


class CoproductFrex(Frex):
    def __init__(self, fral: Fral, coproduct: CoproductConstruction, base: Algebra):
        self.fral = fral
        self.coproduct = coproduct
        self.base = base
        self.presentation = fral.presentation

    def _algebras(self, support):
        nf_alg = self.fral.nf_algebra(support)
        return self.coproduct.algebra(self.base, nf_alg), nf_alg

    def norm(self, t, support=0):
        alg, nf_alg = self._algebras(support)
        return self._eval(alg, nf_alg, support, t)

    def _eval(self, alg, nf_alg, support, t):
        if isinstance(t, Var):
            return self.coproduct.inr(self.base, nf_alg, self.fral.norm(t, support))
        if isinstance(t, Sta):
            return self.coproduct.inl(self.base, nf_alg, t.value)
        return alg.apply(t.op, *[self._eval(alg, nf_alg, support, a) for a in t.args])

    def reify(self, nf):
        return self.coproduct.reify(self.base, self.fral, nf)

    def prove_norm(self, t, support=0):
        return self.coproduct.prove_norm(self.base, self.fral, t, support)

    def var(self, index, support=0):
        return self.norm(Var(index), support)

    def embed(self, value, support=0):
        return self.norm(Sta(value), support)

    def nf_eq(self, a, b):
        return self.base.eq(a[0], b[0]) and self.fral.nf_eq(a[1], b[1])

    def eval_nf(self, target, h, env, nf):
        return self.coproduct.eliminate(target, h, env, nf)


def frex_by_coproduct(fral: Fral, base: Algebra, coproduct: Optional[CoproductConstruction] = None) -> Frex:
    if coproduct is None:
        from ..zoo import coproduct as registry
        name = fral.presentation.name
        if name not in registry.__all__:
            raise NoCoproductRegistered(name)
        coproduct = getattr(registry, name)()
    return CoproductFrex(fral, coproduct, base)


def power(alg: Algebra, n: int) -> Algebra:
    """n-tuples of ``alg`` with pointwise operations."""
    if n < 0:
        raise ValueError(f'power exponent must be >= 0, got {n}')

    def pointwise(op):
        def f(*args):
            if not args:
                return tuple(alg.constant(op) for _ in range(n))
            return tuple(alg.apply(op, *column) for column in zip(*args))
        return f

    sample = None
    if alg.sample is not None:
        sample = lambda rng: tuple(alg.sample(rng) for _ in range(n))  # noqa: E731

    return Algebra(
        name=f'{alg.name}^{n}',
        signature=alg.signature,
        interp={op: pointwise(op) for op in alg.signature.ops},
        eq=lambda a, b: len(a) == len(b) and all(alg.eq(x, y) for x, y in zip(a, b)),
        show=lambda v: '(' + ', '.join(alg.show(x) for x in v) + ')',
        encode=lambda v: [alg.encode(x) for x in v],
        decode=lambda v: tuple(alg.decode(x) for x in v),
        sample=sample,
        notation=alg.notation,
        models=alg.models)
