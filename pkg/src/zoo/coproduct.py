"""
Coproduct constructions, registered under the presentation name they serve.
"""

from src.frexlet.commutative import CommutativeCoproduct

__all__ = ['cmonoid']


def cmonoid():
    return CommutativeCoproduct()
