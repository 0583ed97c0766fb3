"""
Pretty printing of terms and linear derivations as equational-reasoning
chains, in unicode or as a LaTeX align* block.

Step annotations follow the usual convention: ``≡⟨ name ⟩`` applies an axiom
left to right, ``≡⟨ name ⟨`` applies it right to left, and a bracketed
context ``[x · □]`` marks a step taken under congruence.
"""

from __future__ import annotations

from typing import Callable, Mapping, Optional, Sequence

from ..core.term import Sta, Var
from .checker import CheckContext
from .derivation import ByAxiom
from .linear import Direction, Hole, LinearDerivation, LinStep, trace

UNICODE = 'unicode'
LATEX = 'latex'


def var_name(names: Optional[Sequence[str]], index: int) -> str:
    if names is not None and index < len(names):
        return names[index]
    return f'x{index}'


def render_term(t, names: Optional[Sequence[str]] = None, notation: Optional[Mapping[str, str]] = None,
                show: Callable = repr, fmt: str = UNICODE) -> str:
    notation = notation or {}

    def sym(op):
        return notation.get(op, op)

    def atom(s):
        return s if fmt == UNICODE else _latex_escape(s)

    def go(t, parens):
        if isinstance(t, Hole):
            return '□' if fmt == UNICODE else r'\square'
        if isinstance(t, Var):
            return atom(var_name(names, t.index))
        if isinstance(t, Sta):
            text = show(t.value)
            return text if fmt == UNICODE else r'\mathtt{' + _latex_escape(text) + '}'
        if not t.args:
            return atom(sym(t.op))
        if len(t.args) == 2:
            op = sym(t.op)
            if fmt == LATEX:
                op = {'·': r'\cdot', '*': r'\cdot'}.get(op, op)
            s = f'{go(t.args[0], True)} {op} {go(t.args[1], True)}'
            return f'({s})' if parens else s
        if len(t.args) == 1:
            inner = go(t.args[0], True)
            if t.op == 'inv':
                return inner + ('′' if fmt == UNICODE else "'")
            return f'{atom(sym(t.op))}({inner})'
        return atom(sym(t.op)) + '(' + ', '.join(go(a, False) for a in t.args) + ')'

    return go(t, False)


def _latex_escape(s: str) -> str:
    for ch, rep in (('\\', r'\textbackslash{}'), ('_', r'\_'), ('{', r'\{'), ('}', r'\}'),
                    ('#', r'\#'), ('%', r'\%'), ('&', r'\&'), ('$', r'\$')):
        s = s.replace(ch, rep)
    return s


def step_label(step: LinStep, render) -> str:
    if isinstance(step.by, ByAxiom):
        name = step.by.name
    else:
        name = 'eval'
    if step.focus is not None:
        return f'[{render(step.focus)}] {name}'
    return name


def print_steps(ctx: CheckContext, lin: LinearDerivation, fmt: str = UNICODE,
                names: Optional[Sequence[str]] = None, notation: Optional[Mapping[str, str]] = None) -> str:
    show = ctx.algebra.show if ctx.algebra is not None else repr
    if notation is None and ctx.algebra is not None:
        notation = ctx.algebra.notation

    def render(t):
        return render_term(t, names, notation, show, fmt)

    terms = trace(ctx, lin)
    if fmt == UNICODE:
        lines = ['  ' + render(terms[0])]
        for step, t in zip(lin.steps, terms[1:]):
            close = '⟩' if step.direction is Direction.FWD else '⟨'
            lines.append(f'≡⟨ {step_label(step, render)} {close}')
            lines.append('  ' + render(t))
        return '\n'.join(lines)

    if fmt != LATEX:
        raise ValueError(f'unknown format {fmt!r}')
    lines = [r'\begin{align*}', f'  & {render(terms[0])}']
    for step, t in zip(lin.steps, terms[1:]):
        close = r'\rangle' if step.direction is Direction.FWD else r'\langle'
        label = step_label(step, render).replace(' ', r'\ ')
        lines[-1] += r' \\'
        lines.append(rf'  \equiv\;& {render(t)} && \langle\, \mathsf{{{label}}} \,{close}')
    lines.append(r'\end{align*}')
    return '\n'.join(lines)
