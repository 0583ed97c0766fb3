"""
Presentations (signature plus named axioms) and the axiom schemes of the
monoid family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Mapping

from .errors import ArityMismatch, UnknownAxiom
from .term import App, Equation, Signature, Var, term_from_json, term_to_json


@dataclass(frozen=True)
class Presentation:
    signature: Signature
    axioms: Mapping[str, Equation] = field(default_factory=dict)
    name: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'axioms', dict(self.axioms))
        for eq in self.axioms.values():
            eq.validate(self.signature)

    def axiom(self, name: str) -> Equation:
        try:
            return self.axioms[name]
        except KeyError:
            raise UnknownAxiom(name) from None

    def __hash__(self):
        return hash((self.name, self.signature, tuple(self.axioms)))

    def to_json(self) -> Dict[str, Any]:
        return {
            'ops': [{'name': k, 'arity': v} for k, v in self.signature.ops.items()],
            'axioms': [
                {'name': k, 'support': eq.support, 'lhs': term_to_json(eq.lhs), 'rhs': term_to_json(eq.rhs)}
                for k, eq in self.axioms.items()
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping[str, Any], name: str = '') -> 'Presentation':
        try:
            sig = Signature({op['name']: op['arity'] for op in obj['ops']})
            axioms = {}
            for ax in obj['axioms']:
                if ax['name'] in axioms:
                    raise ValueError(f'duplicate axiom {ax["name"]!r}')
                axioms[ax['name']] = Equation(ax['support'], term_from_json(ax['lhs']), term_from_json(ax['rhs']))
        except (KeyError, TypeError) as e:
            raise ValueError(f'malformed presentation: {e}') from e
        return cls(sig, axioms, name)


class SchemeKind(Enum):
    LEFT_NEUTRALITY = 'left-neutrality'
    RIGHT_NEUTRALITY = 'right-neutrality'
    ASSOCIATIVITY = 'associativity'
    COMMUTATIVITY = 'commutativity'
    INVOLUTIVITY = 'involutivity'
    ANTIDISTRIBUTIVITY = 'antidistributivity'


# role -> required arity
ROLE_ARITY = {'op': 2, 'unit': 0, 'inv': 1}

_ROLES = {
    SchemeKind.LEFT_NEUTRALITY: ('op', 'unit'),
    SchemeKind.RIGHT_NEUTRALITY: ('op', 'unit'),
    SchemeKind.ASSOCIATIVITY: ('op',),
    SchemeKind.COMMUTATIVITY: ('op',),
    SchemeKind.INVOLUTIVITY: ('inv',),
    SchemeKind.ANTIDISTRIBUTIVITY: ('op', 'inv'),
}


@dataclass(frozen=True)
class AxiomScheme:
    kind: SchemeKind
    bindings: Mapping[str, str]

    def __hash__(self):
        return hash((self.kind, tuple(sorted(self.bindings.items()))))


def instantiate_scheme(scheme: AxiomScheme, sig: Signature) -> Equation:
    for role in _ROLES[scheme.kind]:
        if role not in scheme.bindings:
            raise ValueError(f'{scheme.kind.value} needs a binding for {role!r}')
        op = scheme.bindings[role]
        if sig.arity(op) != ROLE_ARITY[role]:
            raise ArityMismatch(op, ROLE_ARITY[role], sig.arity(op))

    b = scheme.bindings
    x, y, z = Var(0), Var(1), Var(2)

    def mul(s, t):
        return App(b['op'], (s, t))

    def inv(s):
        return App(b['inv'], (s,))

    kind = scheme.kind
    if kind is SchemeKind.LEFT_NEUTRALITY:
        return Equation(1, mul(App(b['unit']), x), x)
    if kind is SchemeKind.RIGHT_NEUTRALITY:
        return Equation(1, mul(x, App(b['unit'])), x)
    if kind is SchemeKind.ASSOCIATIVITY:
        return Equation(3, mul(mul(x, y), z), mul(x, mul(y, z)))
    if kind is SchemeKind.COMMUTATIVITY:
        return Equation(2, mul(x, y), mul(y, x))
    if kind is SchemeKind.INVOLUTIVITY:
        return Equation(1, inv(inv(x)), x)
    return Equation(2, inv(mul(x, y)), mul(inv(y), inv(x)))
