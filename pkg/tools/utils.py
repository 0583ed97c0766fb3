"""
Command implementations for tools/frex.py.
"""

from src.core.errors import CheckFailed, FrexError, NotProvable, ParseError, UnknownAlgebra
from src.frexlet.api import solve_fral, solve_frex
from src.frexlet.lemma import mk_lemma
from src.misc import MetricLogger
from src.proof.certificate import check_certificate, emit_certificate, parse_certificate
from src.proof.checker import check
from src.proof.linear import linearize, remove_loops
from src.proof.printer import print_steps
from src.syntax.parser import parse_expr, print_goal
from src.zoo.algebra import get_algebra
from src.zoo.frexlet import get_frexlet

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _say(console, text):
    console.print(text, markup=False, highlight=False)


def _load_algebra(args):
    if args.mode == 'fral':
        if args.algebra is not None:
            raise UsageError('--algebra is only meaningful with --mode frex')
        return None
    if args.algebra is None:
        raise UsageError('--mode frex needs --algebra')
    alg = get_algebra(args.algebra)
    if args.pres not in alg.models:
        raise UsageError(f'algebra {alg.name} is not a model of {args.pres}')
    return alg


def _write(path, data: bytes):
    try:
        with open(path, 'wb') as f:
            f.write(data)
    except OSError as e:
        raise UsageError(f'cannot write {path}: {e}') from None


def solve(args, out, err):
    try:
        alg = _load_algebra(args)
        parsed = parse_expr(args.goal, alg.literal if alg is not None else None)
    except (UsageError, FrexError) as e:
        _say(err, f'error: {e}')
        return EXIT_USAGE

    goal, names = parsed.goal, parsed.names
    frexlet = get_frexlet(args.pres, args.mode, alg)
    ctx = frexlet.check_context(goal.support)
    solver = solve_fral if args.mode == 'fral' else solve_frex
    metric_logger = MetricLogger(header='solve:', console=err)
    show = alg.show if alg is not None else str
    notation = alg.notation if alg is not None else None

    try:
        d = metric_logger.timed('solve', solver, frexlet, goal)
    except FrexError as e:
        _say(err, f'error: {e}')
        return EXIT_USAGE
    if d is None:
        _say(err, f'not provable: {print_goal(goal, names, show, notation)}')
        return EXIT_FAIL

    metric_logger.timed('check', check, ctx, goal.lhs, goal.rhs, d)
    lin = metric_logger.timed('linearize', lambda: remove_loops(ctx, linearize(ctx, d)))
    _say(out, print_steps(ctx, lin, args.print, names))

    if args.emit:
        data = emit_certificate(goal, lin, frexlet.presentation, alg, note=args.goal)
        try:
            _write(args.emit, data)
        except UsageError as e:
            _say(err, f'error: {e}')
            return EXIT_USAGE
    if args.verbose:
        metric_logger.log(metric_logger.header, f'steps: {len(lin)}', str(metric_logger))
    return EXIT_OK


def check_file(args, out, err):
    try:
        with open(args.file, 'rb') as f:
            data = f.read()
    except OSError as e:
        _say(err, f'error: cannot read {args.file}: {e}')
        return EXIT_USAGE

    try:
        check_certificate(data)
    except ParseError as e:
        _say(err, f'error: {e}')
        return EXIT_USAGE
    except UnknownAlgebra as e:
        _say(err, f'rejected: {e}')
        return EXIT_FAIL
    except CheckFailed as e:
        _say(err, f'rejected: {e}')
        return EXIT_FAIL

    cert = parse_certificate(data)
    _say(out, f'ok: {cert.goal.lhs} = {cert.goal.rhs} ({len(cert.proof)} steps)')
    return EXIT_OK


def lemma(args, out, err):
    try:
        fral = get_frexlet(args.pres, 'fral')
        parsed = parse_expr(args.goal)
        lem = mk_lemma(fral, args.name, parsed.goal)
    except NotProvable as e:
        _say(err, str(e))
        return EXIT_FAIL
    except FrexError as e:
        _say(err, f'error: {e}')
        return EXIT_USAGE

    _say(out, lem.print(args.print, parsed.names))
    if args.emit:
        try:
            _write(args.emit, lem.certificate())
        except UsageError as e:
            _say(err, f'error: {e}')
            return EXIT_USAGE
    return EXIT_OK

