"""
Initial-algebra witnesses for ``by_frex``. For every monoid variety here the
initial algebra is the one-point algebra; its element is named by the unit.
"""

from src.core.errors import UnknownPresentation
from src.core.term import App
from src.frexlet.api import InitialAlgebra
from src.frexlet.involutive import inv_unit_proof
from src.proof.derivation import ByAxiom, Refl
from src.zoo.algebra import trivial_invmonoid, trivial_monoid
from src.zoo.presentation import INV, MUL, UNIT

_ONE = App(UNIT)


def _name_of(value):
    return _ONE


def _eval_proof(op, consts):
    if op == UNIT:
        return Refl(_ONE)
    if op == MUL:
        return ByAxiom('lftNeutrality', (_ONE,))
    if op == INV:
        return inv_unit_proof()
    raise ValueError(f'unexpected operation {op!r}')


def monoid():
    return InitialAlgebra(trivial_monoid(), _name_of, _eval_proof)


def cmonoid():
    return InitialAlgebra(trivial_monoid(), _name_of, _eval_proof)


def invmonoid():
    return InitialAlgebra(trivial_invmonoid(), _name_of, _eval_proof)


def get_initial(name: str) -> InitialAlgebra:
    if name not in ('monoid', 'cmonoid', 'invmonoid'):
        raise UnknownPresentation(name)
    return globals()[name]()
