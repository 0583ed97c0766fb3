"""
Signatures, terms over de Bruijn-indexed variables, and equations.

Plain terms are built from ``Var`` and ``App``. Extended terms additionally
embed carrier values of a designated algebra as ``Sta`` leaves; a variable of
an extended term is the same ``Var`` node, exported as ``Dyn``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from .errors import ArityMismatch, UnknownOp, VarOutOfScope


@dataclass(frozen=True)
class Signature:
    ops: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        for name, arity in self.ops.items():
            if not isinstance(name, str) or not name:
                raise ValueError(f'operation names must be non-empty strings, got {name!r}')
            if arity < 0:
                raise ValueError(f'arity of {name!r} must be >= 0, got {arity}')
        object.__setattr__(self, 'ops', dict(self.ops))

    def arity(self, name: str) -> int:
        if name not in self.ops:
            raise UnknownOp(name)
        return self.ops[name]

    def __contains__(self, name):
        return name in self.ops

    def __hash__(self):
        return hash(tuple(sorted(self.ops.items())))

    def __str__(self):
        return '{' + ', '.join(f'{k}/{v}' for k, v in self.ops.items()) + '}'


@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self):
        return f'x{self.index}'


Dyn = Var


@dataclass(frozen=True)
class Sta:
    value: Any

    def __str__(self):
        return f'⌜{self.value!r}⌝'


@dataclass(frozen=True)
class App:
    op: str
    args: Tuple['Term', ...] = ()

    def __post_init__(self):
        if not isinstance(self.args, tuple):
            object.__setattr__(self, 'args', tuple(self.args))

    def __hash__(self):
        # terms are immutable and deep; hash once
        h = self.__dict__.get('_hash')
        if h is None:
            h = hash((self.op, self.args))
            object.__setattr__(self, '_hash', h)
        return h

    def __str__(self):
        if not self.args:
            return self.op
        return f'{self.op}(' + ', '.join(str(a) for a in self.args) + ')'


Term = Union[Var, App]
ExtTerm = Union[Var, Sta, App]


@dataclass(frozen=True)
class Equation:
    support: int
    lhs: ExtTerm
    rhs: ExtTerm

    def validate(self, sig: Signature):
        validate_term(sig, self.support, self.lhs)
        validate_term(sig, self.support, self.rhs)

    def __str__(self):
        return f'{self.lhs} = {self.rhs}'


@dataclass(frozen=True)
class Goal(Equation):
    """An equation handed to a solver; Sta-free for fral goals."""

    @property
    def is_static_free(self):
        return not (has_static(self.lhs) or has_static(self.rhs))


def validate_term(sig: Signature, support: int, t: ExtTerm):
    """Raise UnknownOp, ArityMismatch or VarOutOfScope unless ``t`` is well formed."""
    if isinstance(t, Var):
        if not 0 <= t.index < support:
            raise VarOutOfScope(t.index, support)
    elif isinstance(t, App):
        arity = sig.arity(t.op)
        if arity != len(t.args):
            raise ArityMismatch(t.op, arity, len(t.args))
        for a in t.args:
            validate_term(sig, support, a)
    elif not isinstance(t, Sta):
        raise TypeError(f'not a term: {t!r}')


def substitute(t: ExtTerm, sub: Sequence[ExtTerm]) -> ExtTerm:
    if isinstance(t, Var):
        if t.index >= len(sub):
            raise VarOutOfScope(t.index, len(sub))
        return sub[t.index]
    if isinstance(t, App):
        if not t.args:
            return t
        return App(t.op, tuple(substitute(a, sub) for a in t.args))
    return t


def has_static(t: ExtTerm) -> bool:
    if isinstance(t, Sta):
        return True
    if isinstance(t, App):
        return any(has_static(a) for a in t.args)
    return False


def term_size(t: ExtTerm) -> int:
    if isinstance(t, App):
        return 1 + sum(term_size(a) for a in t.args)
    return 1


def variables(t: ExtTerm) -> Iterator[int]:
    if isinstance(t, Var):
        yield t.index
    elif isinstance(t, App):
        for a in t.args:
            yield from variables(a)


def positions(t: ExtTerm, path: Tuple[int, ...] = ()) -> Iterator[Tuple[Tuple[int, ...], ExtTerm]]:
    """Pre-order walk yielding (path, subterm)."""
    yield path, t
    if isinstance(t, App):
        for i, a in enumerate(t.args):
            yield from positions(a, path + (i,))


def replace_at(t: ExtTerm, path: Sequence[int], new: ExtTerm) -> ExtTerm:
    if not path:
        return new
    head, rest = path[0], path[1:]
    args = list(t.args)
    args[head] = replace_at(args[head], rest, new)
    return App(t.op, tuple(args))


# serialisation: {"var": i} | {"sta": literal} | {"app": name, "args": [...]}

def term_to_json(t: ExtTerm, encode: Optional[Callable[[Any], Any]] = None) -> Dict[str, Any]:
    if isinstance(t, Var):
        return {'var': t.index}
    if isinstance(t, Sta):
        if encode is None:
            raise TypeError('cannot serialise a Sta leaf without an encoder')
        return {'sta': encode(t.value)}
    if isinstance(t, App):
        return {'app': t.op, 'args': [term_to_json(a, encode) for a in t.args]}
    raise TypeError(f'not a term: {t!r}')


def term_from_json(obj: Mapping[str, Any], decode: Optional[Callable[[Any], Any]] = None) -> ExtTerm:
    if not isinstance(obj, Mapping):
        raise ValueError(f'term must be an object, got {obj!r}')
    if 'var' in obj:
        index = obj['var']
        if not isinstance(index, int) or isinstance(index, bool) or index < 0:
            raise ValueError(f'bad variable index {index!r}')
        return Var(index)
    if 'sta' in obj:
        if decode is None:
            raise ValueError('Sta leaf found but no constants algebra is declared')
        return Sta(decode(obj['sta']))
    if 'app' in obj:
        args = obj.get('args', [])
        if not isinstance(obj['app'], str) or not isinstance(args, list):
            raise ValueError(f'malformed application {obj!r}')
        return App(obj['app'], tuple(term_from_json(a, decode) for a in args))
    raise ValueError(f'unrecognised term object {obj!r}')
