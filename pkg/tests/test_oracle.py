import pytest

from src.core.errors import BoundExceeded
from src.core.term import App, Sta, Var
from src.oracle import (OracleConfig, direct_oracle, oracle_config, oracle_equal, oracle_proof, perturb, rewrites,
                        random_term, small_constants)
from src.proof.checker import CheckContext, check
from src.proof.linear import replay, step_endpoints
from src.syntax.parser import parse_expr
from src.zoo.algebra import nat_add, string_rev
from src.zoo.presentation import INV, MUL, cmonoid, invmonoid, monoid

x, y, z, w = Var(0), Var(1), Var(2), Var(3)


def mul(a, b):
    return App(MUL, (a, b))


def inv(a):
    return App(INV, (a,))


def test_finds_neutrality_proof():
    g = parse_expr('0 + (x + 0) + 0 = x').goal
    cfg = OracleConfig(monoid())
    lin = oracle_proof(cfg, g.lhs, g.rhs)
    assert lin is not None and len(lin) >= 3
    ctx = CheckContext(monoid(), g.support)
    check(ctx, g.lhs, g.rhs, replay(ctx, lin))


def test_identical_sides():
    assert oracle_proof(OracleConfig(monoid()), x, x).steps == ()


def test_saturation_without_meeting():
    cfg = OracleConfig(monoid())
    assert oracle_proof(cfg, mul(x, y), mul(y, x)) is None
    assert oracle_equal(OracleConfig(cmonoid()), mul(x, y), mul(y, x))


def test_bounds():
    lhs = mul(mul(mul(x, y), z), w)
    rhs = mul(x, mul(y, mul(z, w)))
    assert oracle_equal(OracleConfig(monoid()), lhs, rhs)
    with pytest.raises(BoundExceeded):
        oracle_proof(OracleConfig(monoid(), depth=1), lhs, rhs)

    g = parse_expr('0 + (x + 0) + 0 = x').goal
    with pytest.raises(BoundExceeded):
        oracle_proof(OracleConfig(monoid(), max_states=3), g.lhs, g.rhs)
    with pytest.raises(ValueError):
        OracleConfig(monoid(), depth=0)


def test_rewrite_steps_match_their_results(rng):
    ctx = CheckContext(invmonoid(), 3)
    cfg = OracleConfig(invmonoid())
    for _ in range(50):
        t = random_term(rng, 3, int(rng.integers(1, 6)), inv_p=0.3)
        for u, step in rewrites(cfg, t):
            assert step_endpoints(ctx, step) == (t, u)


def test_involutive_search():
    cfg = OracleConfig(invmonoid())
    lin = oracle_proof(cfg, inv(mul(x, y)), mul(inv(y), inv(x)))
    assert lin is not None and len(lin) == 1
    assert oracle_equal(cfg, inv(inv(x)), x)


def test_frex_search_with_constants():
    alg = nat_add()
    cfg = oracle_config(monoid(), alg, small_constants(alg))
    lhs, rhs = mul(x, Sta(5)), mul(mul(x, Sta(2)), Sta(3))
    lin = oracle_proof(cfg, lhs, rhs)
    assert lin is not None
    ctx = CheckContext(monoid(), 1, alg)
    check(ctx, lhs, rhs, replay(ctx, lin))
    wide = oracle_config(monoid(), alg, small_constants(alg), depth=16)
    assert oracle_proof(wide, mul(x, Sta(5)), mul(Sta(5), x)) is None


def test_perturb_stays_equal(rng):
    cfg = OracleConfig(monoid())
    for _ in range(100):
        t = random_term(rng, 3, int(rng.integers(1, 8)))
        assert direct_oracle('monoid', t, perturb(rng, cfg, t, 6))


def test_direct_oracle():
    assert direct_oracle('monoid', mul(mul(x, y), z), mul(x, mul(y, z)))
    assert not direct_oracle('monoid', mul(x, y), mul(y, x))
    assert direct_oracle('cmonoid', mul(x, mul(y, x)), mul(mul(x, x), y))
    assert not direct_oracle('cmonoid', mul(x, y), mul(x, x))
    assert direct_oracle('invmonoid', inv(mul(x, inv(y))), mul(y, inv(x)))
    assert not direct_oracle('invmonoid', inv(mul(x, y)), mul(inv(x), inv(y)))

    alg = nat_add()
    assert direct_oracle('monoid', mul(x, Sta(5)), mul(mul(x, Sta(2)), Sta(3)), alg)
    assert not direct_oracle('monoid', mul(x, Sta(5)), mul(Sta(5), x), alg)
    assert direct_oracle('cmonoid', mul(x, Sta(5)), mul(Sta(2), mul(x, Sta(3))), alg)
    assert direct_oracle('invmonoid', inv(mul(x, Sta('ab'))), mul(Sta('ba'), inv(x)), string_rev())
    with pytest.raises(ValueError):
        direct_oracle('group', x, x)
