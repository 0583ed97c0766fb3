"""
Surface syntax for goals.

    goal    := expr '=' expr
    expr    := term ('+' term)*
    term    := postfix ('*' postfix)*
    postfix := primary ("′" | "'" | 'inv')*
    primary := name | literal | 'ε' | '(' expr ')' | 'inv' '(' expr ')'

Both ``+`` and ``*`` denote the binary operation of the presentation and
associate to the left. Variables are numbered in order of first occurrence.
Literals are naturals, JSON strings or bracketed JSON arrays; free-algebra
goals only admit the unit literals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from ..core.errors import ParseError
from ..core.term import App, ExtTerm, Goal, Sta, Var
from ..zoo.presentation import INV, MUL, UNIT

UNIT_LITERALS = ('0', '1')

_TOKEN = re.compile(r'''
    (?P<space>\s+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<number>[0-9]+)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<punct>[+*=()′'ε])
''', re.VERBOSE)


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    i = 0
    while i < len(text):
        if text[i] == '[':
            j = _bracket_end(text, i)
            tokens.append(Token('bracket', text[i:j], i))
            i = j
            continue
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(i, f'a token, got {text[i]!r}')
        if m.lastgroup != 'space':
            tokens.append(Token(m.lastgroup, m.group(), i))
        i = m.end()
    tokens.append(Token('eof', '', len(text)))
    return tokens


def _bracket_end(text: str, start: int) -> int:
    depth = 0
    for j in range(start, len(text)):
        if text[j] == '[':
            depth += 1
        elif text[j] == ']':
            depth -= 1
            if depth == 0:
                return j + 1
    raise ParseError(start, "a closing ']'")


@dataclass(frozen=True)
class ParsedGoal:
    goal: Goal
    names: Tuple[str, ...]


class _Parser(object):
    def __init__(self, text, literal, unit_literals):
        self.tokens = tokenize(text)
        self.i = 0
        self.literal = literal
        self.unit_literals = unit_literals
        self.names: List[str] = []

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text):
        if self.tok.text != text or self.tok.kind in ('string', 'bracket'):
            raise ParseError(self.tok.pos, f'{text!r}, got {self.tok.text or "end of input"!r}')
        return self.advance()

    def goal(self) -> Tuple[ExtTerm, ExtTerm]:
        lhs = self.expr()
        self.expect('=')
        rhs = self.expr()
        if self.tok.kind != 'eof':
            raise ParseError(self.tok.pos, f'end of input, got {self.tok.text!r}')
        return lhs, rhs

    def expr(self):
        t = self.term()
        while self.tok.kind == 'punct' and self.tok.text == '+':
            self.advance()
            t = App(MUL, (t, self.term()))
        return t

    def term(self):
        t = self.postfix()
        while self.tok.kind == 'punct' and self.tok.text == '*':
            self.advance()
            t = App(MUL, (t, self.postfix()))
        return t

    def postfix(self):
        t = self.primary()
        while True:
            tok = self.tok
            if tok.kind == 'punct' and tok.text in ('′', "'"):
                self.advance()
            elif tok.kind == 'name' and tok.text == INV and self.tokens[self.i + 1].text != '(':
                self.advance()
            else:
                return t
            t = App(INV, (t,))

    def primary(self):
        tok = self.tok
        if tok.kind == 'name':
            self.advance()
            if tok.text == INV and self.tok.text == '(':
                self.advance()
                inner = self.expr()
                self.expect(')')
                return App(INV, (inner,))
            return self.variable(tok.text)
        if tok.kind == 'punct' and tok.text == '(':
            self.advance()
            inner = self.expr()
            self.expect(')')
            return inner
        if tok.kind == 'punct' and tok.text == 'ε':
            self.advance()
            return App(UNIT)
        if tok.kind in ('number', 'string', 'bracket'):
            self.advance()
            return self.constant(tok)
        raise ParseError(tok.pos, f'a variable, literal or "(", got {tok.text or "end of input"!r}')

    def variable(self, name):
        if name not in self.names:
            self.names.append(name)
        return Var(self.names.index(name))

    def constant(self, tok):
        if self.literal is None:
            if tok.text in self.unit_literals:
                return App(UNIT)
            raise ParseError(tok.pos, f'a variable (free-algebra goals have no constants), got {tok.text!r}')
        try:
            return Sta(self.literal(tok.text))
        except ParseError as e:
            raise ParseError(tok.pos, e.expectation) from None


def parse_expr(text: str, literal: Optional[Callable[[str], object]] = None,
               unit_literals: Sequence[str] = UNIT_LITERALS) -> ParsedGoal:
    """
    Parse ``lhs = rhs``. With a ``literal`` parser (frex goals) literals become
    Sta constants; without one, only ``unit_literals`` are accepted.
    """
    p = _Parser(text, literal, tuple(unit_literals))
    lhs, rhs = p.goal()
    return ParsedGoal(Goal(len(p.names), lhs, rhs), tuple(p.names))


def print_term(t: ExtTerm, names: Optional[Sequence[str]] = None, show: Callable = str,
               notation: Optional[Mapping[str, str]] = None) -> str:
    plus = '*' if (notation or {}).get(MUL) == '*' else '+'

    def go(t, nested):
        if isinstance(t, Var):
            return names[t.index] if names is not None and t.index < len(names) else f'x{t.index}'
        if isinstance(t, Sta):
            return show(t.value)
        if t.op == UNIT:
            return 'ε'
        if t.op == INV:
            return go(t.args[0], True) + '′'
        s = f'{go(t.args[0], True)} {plus} {go(t.args[1], True)}'
        return f'({s})' if nested else s

    return go(t, False)


def print_goal(goal: Goal, names: Optional[Sequence[str]] = None, show: Callable = str,
               notation: Optional[Mapping[str, str]] = None) -> str:
    return f'{print_term(goal.lhs, names, show, notation)} = {print_term(goal.rhs, names, show, notation)}'
