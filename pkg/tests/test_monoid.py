import pytest

from src.core.algebra import bind, sample_envs
from src.core.errors import EndpointMismatch
from src.core.term import App, Sta, Var
from src.frexlet.monoid import MonoidFral, MonoidFrex, UNIT_TERM, mnorm_fral, mnorm_frex, mprove_norm, mreify
from src.oracle.sampling import random_term
from src.proof.checker import CheckContext, check
from src.zoo.algebra import get_algebra, list_concat, nat_add, nat_mul
from src.zoo.presentation import MUL, monoid

x, y, z = Var(0), Var(1), Var(2)
ONE = UNIT_TERM


def mul(a, b):
    return App(MUL, (a, b))


def test_fral_norm_and_reify():
    assert mnorm_fral(mul(mul(x, ONE), mul(y, x))) == (0, 1, 0)
    assert mnorm_fral(mul(ONE, ONE)) == ()
    assert mreify((0, 1, 2)) == mul(x, mul(y, z))
    assert mreify(()) == ONE
    f = MonoidFral()
    assert f.norm(f.reify((2, 0, 0))) == (2, 0, 0)


def test_fral_prove_norm(rng):
    f = MonoidFral()
    for _ in range(300):
        t = random_term(rng, 4, int(rng.integers(1, 12)))
        ctx = CheckContext(monoid(), 4)
        check(ctx, t, f.reify(f.norm(t)), f.prove_norm(t))
        check(ctx, t, f.reify(f.norm(t)), mprove_norm(t))


def test_frex_folds_constants():
    alg = nat_add()
    t = mul(mul(x, Sta(3)), Sta(2))
    assert mnorm_frex(alg, t) == (x, Sta(5))
    assert mnorm_frex(alg, mul(Sta(0), mul(x, Sta(0)))) == (x,)
    assert mnorm_frex(alg, mul(Sta(2), mul(ONE, Sta(3)))) == (Sta(5),)
    assert mnorm_frex(list_concat(), mul(Sta((1,)), Sta((2,)))) == (Sta((1, 2)),)
    # constants do not commute past variables
    assert mnorm_frex(alg, mul(Sta(2), x)) != mnorm_frex(alg, mul(x, Sta(2)))


def test_frex_reify():
    f = MonoidFrex(nat_add())
    assert f.reify(()) == ONE
    assert f.reify((x, Sta(5))) == mul(x, Sta(5))
    assert f.norm(f.reify((Sta(1), x, y, Sta(2)))) == (Sta(1), x, y, Sta(2))


@pytest.mark.parametrize('name', ['nat-add', 'nat-mul', 'list-concat', 'matrix2-mul'])
def test_frex_prove_norm(name, rng):
    alg = get_algebra(name)
    f = MonoidFrex(alg)
    ctx = f.check_context(3)
    for _ in range(200):
        t = random_term(rng, 3, int(rng.integers(1, 10)), const=alg.sample, const_p=0.4)
        check(ctx, t, f.reify(f.norm(t)), f.prove_norm(t))


def test_frex_unit_cancellation():
    alg = nat_mul()
    f = MonoidFrex(alg)
    ctx = f.check_context(1)
    t = mul(Sta(1), mul(Sta(1), Sta(1)))
    assert f.norm(t) == ()
    check(ctx, t, ONE, f.prove_norm(t))
    check(ctx, Sta(1), ONE, mprove_norm(Sta(1), alg))


def test_alt_list_invariant(rng):
    alg = nat_add()
    f = MonoidFrex(alg)
    for _ in range(300):
        t = random_term(rng, 3, int(rng.integers(1, 12)), const=alg.sample, const_p=0.5)
        nf = f.norm(t)
        for a, b in zip(nf, nf[1:]):
            assert not (isinstance(a, Sta) and isinstance(b, Sta))
        assert all(item.value != 0 for item in nf if isinstance(item, Sta))


@pytest.mark.parametrize('name', ['nat-add', 'list-concat', 'matrix2-mul'])
def test_eval_nf_agrees_with_bind(name, rng):
    alg = get_algebra(name)
    f = MonoidFrex(alg)
    for env in sample_envs(alg, 3, 200, rng):
        t = random_term(rng, 3, int(rng.integers(1, 10)), const=alg.sample, const_p=0.4)
        assert alg.eq(f.eval_nf(alg, lambda c: c, env, f.norm(t)), bind(alg, env, t))


def test_var_and_embed():
    f = MonoidFrex(nat_add())
    assert f.var(2) == (Var(2),)
    assert f.embed(4) == (Sta(4),)
    assert f.embed(0) == ()


def test_proof_does_not_prove_other_goals():
    f = MonoidFral()
    t = mul(mul(x, y), z)
    ctx = CheckContext(monoid(), 3)
    with pytest.raises(EndpointMismatch):
        check(ctx, t, mul(z, mul(y, x)), f.prove_norm(t))
