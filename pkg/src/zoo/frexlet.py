"""
Frexlet factories, looked up as ``<presentation>_<mode>`` (``cmonoid_frex``).
"""

from src.core.algebra import Algebra
from src.core.errors import UnknownPresentation
from src.frexlet.commutative import CommutativeFral, CommutativeFrex
from src.frexlet.involutive import InvolutiveFral, InvolutiveFrex
from src.frexlet.monoid import MonoidFral, MonoidFrex


def monoid_fral():
    return MonoidFral()


def monoid_frex(base: Algebra):
    return MonoidFrex(base)


def cmonoid_fral():
    return CommutativeFral()


def cmonoid_frex(base: Algebra):
    return CommutativeFrex(base)


def invmonoid_fral():
    return InvolutiveFral()


def invmonoid_frex(base: Algebra):
    return InvolutiveFrex(base)


PRESENTATIONS = ('monoid', 'cmonoid', 'invmonoid')
MODES = ('fral', 'frex')


def get_frexlet(presentation: str, mode: str, base: Algebra = None):
    if presentation not in PRESENTATIONS:
        raise UnknownPresentation(presentation)
    if mode not in MODES:
        raise ValueError(f'mode must be one of {MODES}, got {mode!r}')
    factory = globals()[f'{presentation}_{mode}']
    if mode == 'fral':
        return factory()
    if base is None:
        raise ValueError('a frex needs a base algebra')
    return factory(base)
