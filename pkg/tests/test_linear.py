import pytest

from src.core.errors import AlignmentError
from src.core.term import App, Var
from src.frexlet.api import solve_fral, solve_frex
from src.frexlet.commutative import CommutativeFral
from src.frexlet.involutive import InvolutiveFral
from src.frexlet.monoid import MonoidFral, MonoidFrex
from src.oracle.sampling import solvable_goal
from src.proof.checker import CheckContext, check, endpoints
from src.proof.derivation import ByAxiom, Cong, Refl, Sym, Trans, atoms
from src.proof.linear import (HOLE, Direction, LinearDerivation, LinStep, count_holes, hole_path, linearize, plug,
                              remove_loops, replay, step_endpoints, trace)
from src.proof.printer import LATEX, UNICODE, print_steps
from src.zoo.algebra import nat_add
from src.zoo.presentation import MUL, UNIT, cmonoid, invmonoid, monoid

x, y, z = Var(0), Var(1), Var(2)
ONE = App(UNIT)
LFT = ByAxiom('lftNeutrality', (x,))
RGT = ByAxiom('rgtNeutrality', (x,))


def mul(a, b):
    return App(MUL, (a, b))


def test_plug():
    ctx = mul(x, mul(HOLE, z))
    assert hole_path(ctx) == (1, 0)
    assert count_holes(ctx) == 1
    assert plug(ctx, y) == mul(x, mul(y, z))
    assert plug(ctx, y, (1, 0)) == mul(x, mul(y, z))
    assert plug(None, y) == y
    assert hole_path(x) is None


def test_linearize_drops_reflexivity():
    ctx = CheckContext(monoid(), 1)
    assert linearize(ctx, Trans(Refl(mul(ONE, x)), LFT)) == linearize(ctx, LFT)
    assert linearize(ctx, Refl(x)).steps == ()


def test_linearize_sym_flips_direction():
    ctx = CheckContext(monoid(), 1)
    lin = linearize(ctx, Sym(LFT))
    assert lin.start == x
    assert lin.steps == (LinStep(None, Direction.BWD, LFT),)


def test_linearize_congruence_left_to_right():
    ctx = CheckContext(monoid(), 2)
    d2 = ByAxiom('rgtNeutrality', (y,))
    lin = linearize(ctx, Cong(MUL, (LFT, d2)))
    assert [s.focus for s in lin.steps] == [mul(HOLE, mul(y, ONE)), mul(x, HOLE)]
    assert [s.path for s in lin.steps] == [(0,), (1,)]
    assert trace(ctx, lin) == [mul(mul(ONE, x), mul(y, ONE)), mul(x, mul(y, ONE)), mul(x, y)]


def test_step_without_path():
    ctx = CheckContext(monoid(), 2)
    step = LinStep(mul(y, HOLE), Direction.FWD, LFT)
    assert step_endpoints(ctx, step) == (mul(y, mul(ONE, x)), mul(y, x))
    with pytest.raises(ValueError):
        step_endpoints(ctx, LinStep(mul(HOLE, HOLE), Direction.FWD, LFT))


def test_remove_loops_collapses_detour():
    ctx = CheckContext(monoid(), 1)
    t = mul(x, ONE)
    lin = LinearDerivation(t, (LinStep(None, Direction.FWD, RGT),
                               LinStep(None, Direction.BWD, RGT),
                               LinStep(None, Direction.FWD, RGT)))
    out = remove_loops(ctx, lin)
    assert out == LinearDerivation(t, (LinStep(None, Direction.FWD, RGT),))


def test_remove_loops_circular():
    ctx = CheckContext(monoid(), 1)
    lin = LinearDerivation(x, (LinStep(None, Direction.BWD, RGT), LinStep(None, Direction.FWD, RGT)))
    assert remove_loops(ctx, lin).steps == ()
    assert replay(ctx, remove_loops(ctx, lin)) == Refl(x)


def test_replay_detects_misalignment():
    ctx = CheckContext(monoid(), 1)
    lin = LinearDerivation(x, (LinStep(None, Direction.FWD, RGT),))
    with pytest.raises(AlignmentError):
        replay(ctx, lin)


def _proofs(rng, count):
    cases = [('monoid', MonoidFral(), monoid()), ('cmonoid', CommutativeFral(), cmonoid()),
             ('invmonoid', InvolutiveFral(), invmonoid())]
    for i in range(count):
        family, fral, pres = cases[i % len(cases)]
        g = solvable_goal(rng, family, 3, int(rng.integers(2, 8)), steps=6)
        yield CheckContext(pres, g.support), g, solve_fral(fral, g)


def test_loop_removal_properties(rng):
    for ctx, g, d in _proofs(rng, 1000):
        lin = linearize(ctx, d)
        out = remove_loops(ctx, lin)
        terms = trace(ctx, out)
        assert len(set(terms)) == len(terms)
        assert len(out) <= len(lin)
        assert terms[0] == g.lhs and terms[-1] == g.rhs
        check(ctx, g.lhs, g.rhs, replay(ctx, out))
        assert remove_loops(ctx, out) == out


def test_linearize_invents_no_steps(rng):
    for ctx, g, d in _proofs(rng, 300):
        lin = linearize(ctx, d)
        assert sorted(map(repr, (s.by for s in lin.steps))) == sorted(map(repr, atoms(d)))
        assert endpoints(ctx, replay(ctx, lin)) == endpoints(ctx, d)


def test_path_does_not_affect_equality(rng):
    ctx = CheckContext(monoid(), 2)
    d = solve_fral(MonoidFral(), solvable_goal(rng, 'monoid', 2, 6))
    lin = linearize(ctx, d)
    stripped = LinearDerivation(lin.start, tuple(LinStep(s.focus, s.direction, s.by) for s in lin.steps))
    assert stripped == lin
    assert trace(ctx, stripped) == trace(ctx, lin)


def test_print_steps():
    ctx = CheckContext(monoid(), 1)
    assert print_steps(ctx, LinearDerivation(x, ()), names=('a',)) == '  a'

    lin = linearize(ctx, Cong(MUL, (LFT, Refl(x))))
    text = print_steps(ctx, lin, UNICODE, ('a',))
    lines = text.splitlines()
    assert lines[0].strip() == '(1 · a) · a'
    assert lines[1] == '≡⟨ [□ · a] lftNeutrality ⟩'
    assert lines[2].strip() == 'a · a'

    back = print_steps(ctx, linearize(ctx, Sym(LFT)), UNICODE, ('a',))
    assert back.splitlines()[1] == '≡⟨ lftNeutrality ⟨'

    latex = print_steps(ctx, lin, LATEX, ('a',))
    assert latex.startswith(r'\begin{align*}') and latex.endswith(r'\end{align*}')
    assert r'\rangle' in latex


def test_frex_linear_round_trip(rng):
    alg = nat_add()
    f = MonoidFrex(alg)
    for _ in range(100):
        g = solvable_goal(rng, 'monoid', 2, 6, alg)
        d = solve_frex(f, g)
        ctx = f.check_context(g.support)
        out = remove_loops(ctx, linearize(ctx, d))
        check(ctx, g.lhs, g.rhs, replay(ctx, out))
