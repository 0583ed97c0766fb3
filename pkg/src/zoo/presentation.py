"""
The monoid family of presentations, assembled from axiom schemes.
"""

from src.core.errors import UnknownPresentation
from src.core.presentation import AxiomScheme, Presentation, SchemeKind, instantiate_scheme
from src.core.term import Signature

MUL, UNIT, INV = '·', '1', 'inv'

MONOID_SIGNATURE = Signature({MUL: 2, UNIT: 0})
INVOLUTIVE_SIGNATURE = Signature({MUL: 2, UNIT: 0, INV: 1})


def _axioms(sig, named_kinds):
    bindings = {'op': MUL, 'unit': UNIT}
    if INV in sig:
        bindings['inv'] = INV
    return {
        name: instantiate_scheme(AxiomScheme(kind, bindings), sig)
        for name, kind in named_kinds
    }


_MONOID_AXIOMS = [
    ('lftNeutrality', SchemeKind.LEFT_NEUTRALITY),
    ('rgtNeutrality', SchemeKind.RIGHT_NEUTRALITY),
    ('assoc', SchemeKind.ASSOCIATIVITY),
]


def monoid():
    return Presentation(MONOID_SIGNATURE, _axioms(MONOID_SIGNATURE, _MONOID_AXIOMS), 'monoid')


def cmonoid():
    axioms = _MONOID_AXIOMS + [('comm', SchemeKind.COMMUTATIVITY)]
    return Presentation(MONOID_SIGNATURE, _axioms(MONOID_SIGNATURE, axioms), 'cmonoid')


def invmonoid():
    axioms = _MONOID_AXIOMS + [
        ('involutivity', SchemeKind.INVOLUTIVITY),
        ('antidistributivity', SchemeKind.ANTIDISTRIBUTIVITY),
    ]
    return Presentation(INVOLUTIVE_SIGNATURE, _axioms(INVOLUTIVE_SIGNATURE, axioms), 'invmonoid')


def get_presentation(name: str) -> Presentation:
    if name not in ('monoid', 'cmonoid', 'invmonoid'):
        raise UnknownPresentation(name)
    return globals()[name]()
