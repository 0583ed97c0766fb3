"""
Deeply-embedded equational derivations.

A derivation proves an equation between extended terms. ``EvalStep`` is
oriented from the composite to the value: f(Sta c1, ..., Sta ck) = Sta f(c1, ..., ck).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence, Tuple, Union

from ..core.term import App, ExtTerm, substitute


@dataclass(frozen=True)
class Refl:
    term: ExtTerm


@dataclass(frozen=True)
class Sym:
    proof: 'Derivation'


@dataclass(frozen=True)
class Trans:
    left: 'Derivation'
    right: 'Derivation'


@dataclass(frozen=True)
class Cong:
    op: str
    proofs: Tuple['Derivation', ...]

    def __post_init__(self):
        if not isinstance(self.proofs, tuple):
            object.__setattr__(self, 'proofs', tuple(self.proofs))


@dataclass(frozen=True)
class ByAxiom:
    name: str
    sub: Tuple[ExtTerm, ...]

    def __post_init__(self):
        if not isinstance(self.sub, tuple):
            object.__setattr__(self, 'sub', tuple(self.sub))


@dataclass(frozen=True)
class EvalStep:
    op: str
    consts: Tuple[Any, ...] = ()

    def __post_init__(self):
        if not isinstance(self.consts, tuple):
            object.__setattr__(self, 'consts', tuple(self.consts))


Derivation = Union[Refl, Sym, Trans, Cong, ByAxiom, EvalStep]
Atomic = Union[ByAxiom, EvalStep]


# smart constructors used by the frexlets; they only drop reflexivity

def sym(d: Derivation) -> Derivation:
    if isinstance(d, Refl):
        return d
    if isinstance(d, Sym):
        return d.proof
    return Sym(d)


def trans(*ds: Derivation) -> Derivation:
    """Compose left to right into a balanced Trans tree."""
    kept = [d for d in ds if not isinstance(d, Refl)]
    if not kept:
        return ds[0]
    return _balanced(kept, 0, len(kept))


def _balanced(ds, lo, hi):
    if hi - lo == 1:
        return ds[lo]
    mid = (lo + hi) // 2
    return Trans(_balanced(ds, lo, mid), _balanced(ds, mid, hi))


def cong(op: str, ds: Sequence[Derivation]) -> Derivation:
    if all(isinstance(d, Refl) for d in ds):
        return Refl(App(op, tuple(d.term for d in ds)))
    return Cong(op, tuple(ds))


def size(d: Derivation) -> int:
    if isinstance(d, Sym):
        return 1 + size(d.proof)
    if isinstance(d, Trans):
        return 1 + size(d.left) + size(d.right)
    if isinstance(d, Cong):
        return 1 + sum(size(p) for p in d.proofs)
    return 1


def atoms(d: Derivation):
    """Atomic steps in left-to-right order."""
    if isinstance(d, (ByAxiom, EvalStep)):
        yield d
    elif isinstance(d, Sym):
        yield from atoms(d.proof)
    elif isinstance(d, Trans):
        yield from atoms(d.left)
        yield from atoms(d.right)
    elif isinstance(d, Cong):
        for p in d.proofs:
            yield from atoms(p)


def instantiate(d: Derivation, sub: Sequence[ExtTerm]) -> Derivation:
    """Substitute ``sub`` for the variables of every term in ``d``; the result proves the instance."""
    if isinstance(d, Refl):
        return Refl(substitute(d.term, sub))
    if isinstance(d, Sym):
        return Sym(instantiate(d.proof, sub))
    if isinstance(d, Trans):
        return Trans(instantiate(d.left, sub), instantiate(d.right, sub))
    if isinstance(d, Cong):
        return Cong(d.op, tuple(instantiate(p, sub) for p in d.proofs))
    if isinstance(d, ByAxiom):
        return ByAxiom(d.name, tuple(substitute(t, sub) for t in d.sub))
    return d
