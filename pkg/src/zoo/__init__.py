"""
Named algebras and presentations.
"""

# frexlet factories (zoo.frexlet, zoo.coproduct, zoo.initial) are imported
# explicitly; certificate checking must load no normaliser code.
from .algebra import *
from .presentation import *
from . import algebra
from . import presentation
