import pytest

from src.core.algebra import bind, sample_envs
from src.core.term import App, Sta, Var
from src.frexlet.involutive import (InvolutiveFral, InvolutiveFrex, TaggedVar, inorm_fral, inorm_frex, inv_nf,
                                    inv_unit_proof, iprove_norm)
from src.frexlet.monoid import UNIT_TERM, push_const
from src.oracle.sampling import random_term
from src.proof.checker import CheckContext, check
from src.zoo.algebra import get_algebra, list_rev, string_rev
from src.zoo.presentation import INV, MUL, invmonoid

x, y, z = Var(0), Var(1), Var(2)
ONE = UNIT_TERM


def mul(a, b):
    return App(MUL, (a, b))


def inv(a):
    return App(INV, (a,))


def test_fral_norm():
    assert inorm_fral(inv(mul(x, y))) == (TaggedVar(1, True), TaggedVar(0, True))
    assert inorm_fral(inv(inv(x))) == (TaggedVar(0),)
    assert inorm_fral(inv(ONE)) == ()
    assert inorm_fral(mul(inv(mul(x, inv(y))), z)) == (TaggedVar(1), TaggedVar(0, True), TaggedVar(2))
    assert str(TaggedVar(3, True)) == 'x3′'


def test_fral_reify():
    f = InvolutiveFral()
    assert f.reify((TaggedVar(1, True), TaggedVar(0))) == mul(inv(y), x)
    assert f.reify(()) == ONE
    nf = (TaggedVar(0), TaggedVar(0, True), TaggedVar(2, True))
    assert f.norm(f.reify(nf)) == nf


def test_inv_unit_proof():
    check(CheckContext(invmonoid(), 0), inv(ONE), ONE, inv_unit_proof())


def test_fral_prove_norm(rng):
    f = InvolutiveFral()
    ctx = CheckContext(invmonoid(), 4)
    for _ in range(300):
        t = random_term(rng, 4, int(rng.integers(1, 12)), inv_p=0.3)
        check(ctx, t, f.reify(f.norm(t)), f.prove_norm(t))
        check(ctx, t, f.reify(f.norm(t)), iprove_norm(t))


def test_inv_nf(rng):
    f = InvolutiveFral()
    for _ in range(200):
        t = random_term(rng, 3, int(rng.integers(1, 10)), inv_p=0.3)
        nf = f.norm(t)
        assert inv_nf(inv_nf(nf)) == nf
        assert inv_nf(nf) == f.norm(inv(t))


def test_inv_nf_reverses_products(rng):
    f = InvolutiveFral()
    for _ in range(200):
        a = f.norm(random_term(rng, 3, int(rng.integers(1, 8)), inv_p=0.3))
        b = f.norm(random_term(rng, 3, int(rng.integers(1, 8)), inv_p=0.3))
        assert inv_nf(a + b) == inv_nf(b) + inv_nf(a)
        assert inv_nf(inv_nf(a + b)) == a + b


def concat(base, a, b):
    out = list(a)
    for item in b:
        if isinstance(item, Sta):
            push_const(base, out, item.value)
        else:
            out.append(item)
    return tuple(out)


@pytest.mark.parametrize('name', ['string-rev', 'list-rev'])
def test_frex_inv_nf_reverses_products(name, rng):
    alg = get_algebra(name)
    f = InvolutiveFrex(alg)
    for _ in range(200):
        ta = random_term(rng, 3, int(rng.integers(1, 8)), inv_p=0.3, const=alg.sample, const_p=0.4)
        tb = random_term(rng, 3, int(rng.integers(1, 8)), inv_p=0.3, const=alg.sample, const_p=0.4)
        a, b = f.norm(ta), f.norm(tb)
        assert concat(alg, a, b) == f.norm(mul(ta, tb))
        assert inv_nf(concat(alg, a, b), alg) == concat(alg, inv_nf(b, alg), inv_nf(a, alg))
        assert inv_nf(inv_nf(a, alg), alg) == a
        assert inv_nf(a, alg) == f.norm(inv(ta))


def test_frex_inv_nf_inverts_constants():
    alg = string_rev()
    assert inv_nf((Sta('ab'), TaggedVar(0)), alg) == (TaggedVar(0, True), Sta('ba'))
    assert inv_nf((TaggedVar(1, True), Sta('a'), TaggedVar(0)), alg) == (TaggedVar(0, True), Sta('a'), TaggedVar(1))
    assert inv_nf((), alg) == ()


def test_frex_norm():
    alg = list_rev()
    assert inorm_frex(alg, inv(Sta((1, 2)))) == (Sta((2, 1)),)
    assert inorm_frex(alg, mul(inv(Sta(())), x)) == (TaggedVar(0),)
    assert inorm_frex(alg, inv(mul(x, Sta((1,))))) == (Sta((1,)), TaggedVar(0, True))
    assert inorm_frex(alg, mul(Sta((1,)), inv(Sta((3, 2))))) == (Sta((1, 2, 3)),)


@pytest.mark.parametrize('name', ['list-rev', 'string-rev', 'trivial-invmonoid'])
def test_frex_prove_norm(name, rng):
    alg = get_algebra(name)
    f = InvolutiveFrex(alg)
    ctx = f.check_context(3)
    for _ in range(200):
        t = random_term(rng, 3, int(rng.integers(1, 10)), inv_p=0.3, const=alg.sample, const_p=0.4)
        check(ctx, t, f.reify(f.norm(t)), f.prove_norm(t))
        check(ctx, t, f.reify(f.norm(t)), iprove_norm(t, alg))


def test_frex_inverted_unit_constant():
    alg = string_rev()
    f = InvolutiveFrex(alg)
    t = inv(mul(Sta(''), inv(Sta(''))))
    assert f.norm(t) == ()
    check(f.check_context(0), t, ONE, f.prove_norm(t))


@pytest.mark.parametrize('name', ['list-rev', 'string-rev'])
def test_eval_nf_agrees_with_bind(name, rng):
    alg = get_algebra(name)
    f = InvolutiveFrex(alg)
    for env in sample_envs(alg, 3, 200, rng):
        t = random_term(rng, 3, int(rng.integers(1, 10)), inv_p=0.3, const=alg.sample, const_p=0.4)
        assert alg.eq(f.eval_nf(alg, lambda c: c, env, f.norm(t)), bind(alg, env, t))


def test_var_and_embed():
    f = InvolutiveFrex(string_rev())
    assert f.var(1) == (TaggedVar(1),)
    assert f.embed('ab') == (Sta('ab'),)
    assert f.embed('') == ()
