"""
Family-specific decision procedures, written without the frexlet code:
flattened sequences for monoids, occurrence multisets for commutative monoids
and polarity-pushed sequences for involutive monoids.
"""

from collections import Counter
from functools import reduce
from typing import Optional

from ..core.algebra import Algebra
from ..core.term import App, ExtTerm, Sta, Var

FAMILIES = ('monoid', 'cmonoid', 'invmonoid')


def _flatten(t, flip, out, alg):
    if isinstance(t, Var):
        out.append(('var', t.index, flip))
    elif isinstance(t, Sta):
        out.append(('const', alg.interp['inv'](t.value) if flip else t.value))
    elif t.op == 'inv':
        _flatten(t.args[0], not flip, out, alg)
    elif t.args:
        for a in (t.args[::-1] if flip else t.args):
            _flatten(a, flip, out, alg)
    return out


def _fold_runs(items, alg: Optional[Algebra]):
    """Multiply maximal runs of constants and drop those equal to the unit."""
    out = []
    run = []
    for item in items + [None]:
        if item is not None and item[0] == 'const':
            run.append(item[1])
            continue
        if run:
            value = reduce(alg.interp['·'], run)
            if not alg.eq(value, alg.interp['1']()):
                out.append(('const', value))
            run = []
        if item is not None:
            out.append(item)
    return out


def _same_items(a, b, alg):
    if len(a) != len(b):
        return False
    for x, y in zip(a, b):
        if x[0] != y[0]:
            return False
        if x[0] == 'const' and not alg.eq(x[1], y[1]):
            return False
        if x[0] == 'var' and x != y:
            return False
    return True


def direct_oracle(family: str, lhs: ExtTerm, rhs: ExtTerm, algebra: Optional[Algebra] = None) -> bool:
    if family not in FAMILIES:
        raise ValueError(f'unknown family {family!r}')

    if family == 'cmonoid':
        def summary(t):
            leaves = _flatten(t, False, [], algebra)
            counts = Counter(item[1] for item in leaves if item[0] == 'var')
            consts = [item[1] for item in leaves if item[0] == 'const']
            value = reduce(algebra.interp['·'], consts, algebra.interp['1']()) if algebra is not None else None
            return counts, value

        (ca, va), (cb, vb) = summary(lhs), summary(rhs)
        return ca == cb and (algebra is None or algebra.eq(va, vb))

    a, b = _flatten(lhs, False, [], algebra), _flatten(rhs, False, [], algebra)
    if algebra is not None:
        a, b = _fold_runs(a, algebra), _fold_runs(b, algebra)
    return _same_items(a, b, algebra)
