"""
Frexlets: proof-producing normalisers for the monoid family.
"""

from .api import *
from .monoid import MonoidFral, MonoidFrex, mnorm_fral, mnorm_frex, mprove_norm, mreify
from .commutative import (CommutativeCoproduct, CommutativeFral, CommutativeFrex, LinPoly, cnorm_fral,
                          cnorm_frex, coproduct_cm, cprove_norm, creify)
from .involutive import InvolutiveFral, InvolutiveFrex, TaggedVar, inorm_fral, inorm_frex, inv_nf, iprove_norm
from .lemma import Lemma, mk_lemma
