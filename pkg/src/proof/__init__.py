"""
Derivations, the independent checker, linear derivations and certificates.
"""

from .derivation import *
from .checker import *
from .linear import *
from .printer import *
from .certificate import *
