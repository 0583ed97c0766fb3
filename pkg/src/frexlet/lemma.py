"""
Named fral lemmas: a solved equation packaged with its derivation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from ..core.errors import NotProvable
from ..core.presentation import Presentation
from ..core.term import Equation, Goal
from ..proof.certificate import emit_certificate
from ..proof.checker import CheckContext, check
from ..proof.derivation import Derivation
from ..proof.linear import LinearDerivation, linearize, remove_loops
from ..proof.printer import UNICODE, print_steps
from .api import Fral, solve_fral


@dataclass(frozen=True)
class Lemma:
    name: str
    equation: Equation
    proof: Derivation
    presentation: Presentation

    @property
    def context(self) -> CheckContext:
        return CheckContext(self.presentation, self.equation.support)

    def check(self):
        check(self.context, self.equation.lhs, self.equation.rhs, self.proof)

    def linear(self) -> LinearDerivation:
        return remove_loops(self.context, linearize(self.context, self.proof))

    def print(self, fmt: str = UNICODE, names: Optional[Sequence[str]] = None,
              notation: Optional[Mapping[str, str]] = None) -> str:
        return f'{self.name} : ' + print_steps(self.context, self.linear(), fmt, names, notation).lstrip()

    def certificate(self, note: str = '') -> bytes:
        goal = Goal(self.equation.support, self.equation.lhs, self.equation.rhs)
        return emit_certificate(goal, self.linear(), self.presentation, None, note or self.name)


def mk_lemma(fral: Fral, name: str, g: Goal) -> Lemma:
    d = solve_fral(fral, g)
    if d is None:
        raise NotProvable(g)
    lemma = Lemma(name, Equation(g.support, g.lhs, g.rhs), d, fral.presentation)
    lemma.check()
    return lemma
