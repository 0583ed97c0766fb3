"""
Concrete algebras: a carrier with decidable equality and an interpretation
of every operation symbol of a signature.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Any, Callable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import ArityMismatch, UnknownOp
from .term import App, Equation, ExtTerm, Signature, Sta, Var, validate_term


def _identity(x):
    return x


@dataclass(frozen=True, eq=False)
class Algebra:
    """
    name: registry key, e.g. ``nat-add``
    interp: op name -> total function of ``arity`` carrier values
    eq: decidable equality on the carrier
    show: printable (and, for bundled algebras, re-parsable) literal
    encode / decode: JSON-compatible literal form used by certificates
    sample: draws a random carrier value from a numpy Generator
    literal: parses the text of a surface-syntax literal
    notation: display symbols per op, e.g. {'·': '+', '1': '0'}
    models: names of the presentations this algebra validates
    """
    name: str
    signature: Signature
    interp: Mapping[str, Callable[..., Any]]
    eq: Callable[[Any, Any], bool] = operator.eq
    show: Callable[[Any], str] = repr
    encode: Callable[[Any], Any] = _identity
    decode: Callable[[Any], Any] = _identity
    sample: Optional[Callable[[np.random.Generator], Any]] = None
    literal: Optional[Callable[[str], Any]] = None
    notation: Mapping[str, str] = field(default_factory=dict)
    models: Tuple[str, ...] = ()

    def __post_init__(self):
        missing = [op for op in self.signature.ops if op not in self.interp]
        if missing:
            raise UnknownOp(missing[0])

    def apply(self, op: str, *args):
        arity = self.signature.arity(op)
        if arity != len(args):
            raise ArityMismatch(op, arity, len(args))
        return self.interp[op](*args)

    def constant(self, op: str):
        return self.apply(op)

    def __repr__(self):
        return f'Algebra({self.name})'


def bind(alg: Algebra, env: Sequence[Any], t: ExtTerm):
    """Homomorphic extension of ``env`` to terms; Sta leaves denote themselves."""
    validate_term(alg.signature, len(env), t)
    return _fold(alg, env, t)


def _fold(alg, env, t):
    if isinstance(t, Var):
        return env[t.index]
    if isinstance(t, Sta):
        return t.value
    return alg.interp[t.op](*[_fold(alg, env, a) for a in t.args])


def validates(alg: Algebra, eq: Equation, sample: Sequence[Sequence[Any]]) -> bool:
    """Sampled check of ``eq`` in ``alg``; a testing aid, never a proof."""
    for env in sample:
        if len(env) != eq.support:
            raise ValueError(f'environment of length {len(env)} for support {eq.support}')
        if not alg.eq(bind(alg, env, eq.lhs), bind(alg, env, eq.rhs)):
            return False
    return True


def sample_envs(alg: Algebra, support: int, count: int, rng: np.random.Generator) -> List[Tuple[Any, ...]]:
    if alg.sample is None:
        raise ValueError(f'{alg.name} has no sampler')
    return [tuple(alg.sample(rng) for _ in range(support)) for _ in range(count)]
