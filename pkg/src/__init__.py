"""
frexlet: proof-producing simplifiers for the monoid family of algebraic theories.
"""

__version__ = '0.3.0'
