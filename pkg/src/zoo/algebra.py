"""
Bundled algebras, looked up by registry name (``nat-add`` -> ``nat_add()``).
"""

import json
import operator

import numpy as np

from src.core.algebra import Algebra
from src.core.errors import ParseError, UnknownAlgebra
from src.zoo.presentation import INV, INVOLUTIVE_SIGNATURE, MONOID_SIGNATURE, MUL, UNIT

ADDITIVE = {MUL: '+', UNIT: '0'}
MULTIPLICATIVE = {MUL: '*', UNIT: '1'}


def _natural(text):
    if not text.isdigit():
        raise ParseError(0, f'a natural number, got {text!r}')
    return int(text)


def _json(kind, check):
    def parse(text):
        try:
            value = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.pos, f'a {kind} literal') from None
        if not check(value):
            raise ParseError(0, f'a {kind} literal, got {text!r}')
        return value
    return parse


def _is_nat(v):
    return isinstance(v, int) and not isinstance(v, bool) and v >= 0


def nat_add():
    return Algebra(
        name='nat-add',
        signature=MONOID_SIGNATURE,
        interp={MUL: operator.add, UNIT: lambda: 0},
        show=str,
        decode=int,
        sample=lambda rng: int(rng.integers(0, 50)),
        literal=_natural,
        notation=ADDITIVE,
        models=('monoid', 'cmonoid'))


def nat_mul():
    return Algebra(
        name='nat-mul',
        signature=MONOID_SIGNATURE,
        interp={MUL: operator.mul, UNIT: lambda: 1},
        show=str,
        decode=int,
        sample=lambda rng: int(rng.integers(0, 12)),
        literal=_natural,
        notation=MULTIPLICATIVE,
        models=('monoid', 'cmonoid'))


def _tuple_show(v):
    return json.dumps(list(v))


def _sample_list(rng):
    return tuple(int(x) for x in rng.integers(0, 3, size=int(rng.integers(0, 4))))


_list_literal = _json('list', lambda v: isinstance(v, list) and all(_is_nat(x) for x in v))


def list_concat():
    return Algebra(
        name='list-concat',
        signature=MONOID_SIGNATURE,
        interp={MUL: operator.add, UNIT: lambda: ()},
        show=_tuple_show,
        encode=list,
        decode=tuple,
        sample=_sample_list,
        literal=lambda text: tuple(_list_literal(text)),
        notation=ADDITIVE,
        models=('monoid',))


def list_rev():
    return Algebra(
        name='list-rev',
        signature=INVOLUTIVE_SIGNATURE,
        interp={MUL: operator.add, UNIT: lambda: (), INV: lambda xs: tuple(reversed(xs))},
        show=_tuple_show,
        encode=list,
        decode=tuple,
        sample=_sample_list,
        literal=lambda text: tuple(_list_literal(text)),
        notation=ADDITIVE,
        models=('monoid', 'invmonoid'))


def string_rev():
    return Algebra(
        name='string-rev',
        signature=INVOLUTIVE_SIGNATURE,
        interp={MUL: operator.add, UNIT: lambda: '', INV: lambda s: s[::-1]},
        show=lambda s: json.dumps(s, ensure_ascii=False),
        decode=str,
        sample=lambda rng: ''.join(rng.choice(list('abc'), size=int(rng.integers(0, 4)))),
        literal=_json('string', lambda v: isinstance(v, str)),
        notation=ADDITIVE,
        models=('monoid', 'invmonoid'))


def _matmul(a, b):
    return tuple(map(tuple, (np.array(a, dtype=object) @ np.array(b, dtype=object)).tolist()))


_matrix_literal = _json('2x2 matrix', lambda v: isinstance(v, list) and len(v) == 2 and all(
    isinstance(r, list) and len(r) == 2 and all(_is_nat(x) for x in r) for r in v))


def matrix2_mul():
    return Algebra(
        name='matrix2-mul',
        signature=MONOID_SIGNATURE,
        interp={MUL: _matmul, UNIT: lambda: ((1, 0), (0, 1))},
        show=lambda m: json.dumps([list(r) for r in m]),
        encode=lambda m: [list(r) for r in m],
        decode=lambda v: tuple(tuple(int(x) for x in r) for r in v),
        sample=lambda rng: tuple(map(tuple, rng.integers(0, 4, size=(2, 2)).tolist())),
        literal=lambda text: tuple(map(tuple, _matrix_literal(text))),
        notation=MULTIPLICATIVE,
        models=('monoid',))


def _point(*args):
    return ()


def trivial_monoid():
    return Algebra(
        name='trivial-monoid',
        signature=MONOID_SIGNATURE,
        interp={MUL: _point, UNIT: _point},
        show=lambda _: '()',
        encode=list,
        decode=tuple,
        sample=lambda rng: (),
        notation=ADDITIVE,
        models=('monoid', 'cmonoid'))


def trivial_invmonoid():
    return Algebra(
        name='trivial-invmonoid',
        signature=INVOLUTIVE_SIGNATURE,
        interp={MUL: _point, UNIT: _point, INV: _point},
        show=lambda _: '()',
        encode=list,
        decode=tuple,
        sample=lambda rng: (),
        notation=ADDITIVE,
        models=('monoid', 'invmonoid'))


NAMES = ('nat-add', 'nat-mul', 'list-concat', 'list-rev', 'string-rev', 'matrix2-mul',
         'trivial-monoid', 'trivial-invmonoid')


def get_algebra(name: str) -> Algebra:
    if name not in NAMES:
        raise UnknownAlgebra(name)
    return globals()[name.replace('-', '_')]()
