"""
Self-contained proof certificates.

A certificate carries the presentation, an optional constants-algebra
registry name, the goal and a linear proof. Checking replays the steps into a
derivation tree and runs the checker; no normaliser code is involved.

Schema (UTF-8 JSON, keys sorted)::

    {"presentation": {"ops": [{"name", "arity"}...], "axioms": [{"name", "support", "lhs", "rhs"}...]},
     "algebra": "nat-add",                      # omitted for Sta-free goals
     "goal": {"support": n, "lhs": term, "rhs": term},
     "steps": [{"context": term-with-hole | null, "dir": "fwd" | "bwd",
                "by": {"axiom": name, "subst": [term...]} | {"eval": {"op": name, "args": [literal...]}}}],
     "meta": {"tool": "frexlet", "version": "...", "note": "..."}}

    term ::= {"var": i} | {"sta": literal} | {"app": name, "args": [term...]} | {"hole": true}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional, Union

from .. import __version__
from ..core.algebra import Algebra
from ..core.errors import CheckFailed, EndpointMismatch, FrexError, ParseError
from ..core.presentation import Presentation
from ..core.term import App, Goal, term_from_json, term_to_json
from ..zoo.algebra import get_algebra
from .checker import CheckContext, check
from .derivation import ByAxiom, EvalStep
from .linear import HOLE, Direction, Hole, LinearDerivation, LinStep, replay


@dataclass(frozen=True)
class Certificate:
    presentation: Presentation
    algebra: Optional[str]
    goal: Goal
    proof: LinearDerivation
    meta: Mapping[str, Any] = field(default_factory=dict)


def _context_to_json(t, encode):
    if isinstance(t, Hole):
        return {'hole': True}
    if isinstance(t, App):
        return {'app': t.op, 'args': [_context_to_json(a, encode) for a in t.args]}
    return term_to_json(t, encode)


def _context_from_json(obj, decode):
    if isinstance(obj, Mapping) and obj.get('hole') is True:
        return HOLE
    if isinstance(obj, Mapping) and 'app' in obj:
        args = obj.get('args', [])
        if not isinstance(args, list):
            raise ValueError(f'malformed application {obj!r}')
        return App(obj['app'], tuple(_context_from_json(a, decode) for a in args))
    return term_from_json(obj, decode)


def _step_to_json(step: LinStep, encode):
    if isinstance(step.by, ByAxiom):
        by = {'axiom': step.by.name, 'subst': [term_to_json(t, encode) for t in step.by.sub]}
    else:
        by = {'eval': {'op': step.by.op, 'args': [encode(c) for c in step.by.consts]}}
    return {
        'context': None if step.focus is None else _context_to_json(step.focus, encode),
        'dir': step.direction.value,
        'by': by,
    }


def _step_from_json(obj, decode):
    by = obj['by']
    if 'axiom' in by:
        atom = ByAxiom(by['axiom'], tuple(term_from_json(t, decode) for t in by['subst']))
    elif 'eval' in by:
        if decode is None:
            raise ValueError('evaluation step found but no constants algebra is declared')
        atom = EvalStep(by['eval']['op'], tuple(decode(c) for c in by['eval']['args']))
    else:
        raise ValueError(f'unrecognised step justification {by!r}')
    context = obj['context']
    return LinStep(None if context is None else _context_from_json(context, decode), Direction(obj['dir']), atom)


def _resolve(algebra: Union[None, str, Algebra]) -> Optional[Algebra]:
    if algebra is None or isinstance(algebra, Algebra):
        return algebra
    return get_algebra(algebra)


def to_json(cert: Certificate) -> Dict[str, Any]:
    alg = _resolve(cert.algebra)
    encode = alg.encode if alg is not None else None
    obj = {
        'presentation': cert.presentation.to_json(),
        'goal': {
            'support': cert.goal.support,
            'lhs': term_to_json(cert.goal.lhs, encode),
            'rhs': term_to_json(cert.goal.rhs, encode),
        },
        'steps': [_step_to_json(s, encode) for s in cert.proof.steps],
        'meta': dict(cert.meta),
    }
    if cert.algebra is not None:
        obj['algebra'] = cert.algebra
    return obj


def dumps(cert: Certificate) -> bytes:
    text = json.dumps(to_json(cert), sort_keys=True, ensure_ascii=False, separators=(',', ':'))
    return (text + '\n').encode('utf-8')


def emit_certificate(goal: Goal, proof: LinearDerivation, presentation: Presentation,
                     algebra: Union[None, str, Algebra] = None, note: str = '') -> bytes:
    """Serialise a certificate; the proof is re-rooted at the goal's lhs."""
    if isinstance(algebra, Algebra):
        algebra = algebra.name
    meta = {'tool': 'frexlet', 'version': __version__, 'note': note}
    cert = Certificate(presentation, algebra, goal, LinearDerivation(goal.lhs, proof.steps), meta)
    return dumps(cert)


def parse_certificate(data: Union[bytes, str]) -> Certificate:
    try:
        text = data.decode('utf-8') if isinstance(data, bytes) else data
        obj = json.loads(text)
    except UnicodeDecodeError as e:
        raise ParseError(e.start, 'UTF-8 text') from None
    except json.JSONDecodeError as e:
        raise ParseError(e.pos, e.msg) from None
    if not isinstance(obj, dict):
        raise ParseError(0, 'a certificate object')

    # UnknownAlgebra propagates as is
    name = obj.get('algebra')
    alg = get_algebra(name) if name is not None else None
    decode = alg.decode if alg is not None else None
    try:
        pres = Presentation.from_json(obj['presentation'])
        g = obj['goal']
        if not isinstance(g['support'], int) or g['support'] < 0:
            raise ValueError(f'bad support {g["support"]!r}')
        goal = Goal(g['support'], term_from_json(g['lhs'], decode), term_from_json(g['rhs'], decode))
        steps = []
        for i, s in enumerate(obj['steps']):
            try:
                steps.append(_step_from_json(s, decode))
            except (KeyError, TypeError, ValueError) as e:
                raise ParseError(f'steps[{i}]', f'a well-formed step ({e})') from None
        meta = obj.get('meta', {})
    except ParseError:
        raise
    except FrexError as e:
        raise ParseError('presentation', str(e)) from None
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError('certificate', f'a well-formed certificate ({e})') from None
    return Certificate(pres, name, goal, LinearDerivation(goal.lhs, tuple(steps)), meta)


def _reason(e: Exception) -> str:
    kind = 'EndpointMismatch' if isinstance(e, EndpointMismatch) else type(e).__name__
    return f'{kind}: {e}'


def check_certificate(data: Union[bytes, str]):
    """Raise ParseError, UnknownAlgebra or CheckFailed unless the certificate verifies."""
    cert = parse_certificate(data)
    alg = _resolve(cert.algebra)
    try:
        ctx = CheckContext(cert.presentation, cert.goal.support, alg)
        ctx.validate(cert.goal.lhs)
        ctx.validate(cert.goal.rhs)
    except FrexError as e:
        raise CheckFailed(None, _reason(e)) from e

    try:
        d = replay(ctx, cert.proof)
    except CheckFailed:
        raise
    except EndpointMismatch as e:
        raise CheckFailed(getattr(e, 'index', None), _reason(e)) from e

    try:
        check(ctx, cert.goal.lhs, cert.goal.rhs, d)
    except FrexError as e:
        raise CheckFailed(len(cert.proof.steps), _reason(e)) from e
