"""
Signatures, terms, presentations and concrete algebras.
"""

from .errors import *
from .term import *
from .presentation import *
from .algebra import *
