import pytest

from src.core.errors import ParseError
from src.core.term import App, Sta, Var, positions, substitute
from src.oracle.sampling import random_term
from src.syntax.parser import parse_expr, print_goal, print_term, tokenize
from src.zoo.algebra import get_algebra, string_rev
from src.zoo.presentation import INV, MUL, UNIT

x, y, z = Var(0), Var(1), Var(2)


def mul(a, b):
    return App(MUL, (a, b))


def inv(a):
    return App(INV, (a,))


def statics(t):
    return [s.value for _, s in positions(t) if isinstance(s, Sta)]


# (text, algebra name)
GOALS = [
    ('0 + (x + 0) + 0 = x', None),
    ('(x + 3) + 2 = x + 5', 'nat-add'),
    ('(x + 3) + 2 = 5 + x', 'nat-add'),
    ('(2 + x) + (y + 3) = x + (y + 5)', 'nat-add'),
    ('inv(inv(x)) = x', None),
    ('inv(x * y) = inv(y) * inv(x)', None),
    ('x′′ = x', None),
    ("inv(x + \"ab\") = \"ba\" + x'", 'string-rev'),
    ('"" + x′′ = x', 'string-rev'),
    ('[0, 1] + x = x + []', 'list-concat'),
    ('[[1, 2], [0, 1]] * x = x * [[1, 0], [0, 1]]', 'matrix2-mul'),
    ('2 * (x * 3) = 6 * x', 'nat-mul'),
]


@pytest.mark.parametrize('text, alg_name', GOALS)
def test_print_then_parse(text, alg_name):
    alg = get_algebra(alg_name) if alg_name is not None else None
    literal = alg.literal if alg is not None else None
    parsed = parse_expr(text, literal)
    printed = print_goal(parsed.goal, parsed.names, alg.show if alg is not None else str,
                         alg.notation if alg is not None else None)
    again = parse_expr(printed, literal)
    assert again == parsed, printed
    # printing is a fixpoint after one round
    assert print_goal(again.goal, again.names, alg.show if alg is not None else str,
                      alg.notation if alg is not None else None) == printed


def test_constants_and_support():
    parsed = parse_expr('(2 + x) + (y + 3) = x + (y + 5)', get_algebra('nat-add').literal)
    assert parsed.names == ('x', 'y')
    assert parsed.goal.support == 2
    assert statics(parsed.goal.lhs) == [2, 3]
    assert statics(parsed.goal.rhs) == [5]
    assert parsed.goal.lhs == mul(mul(Sta(2), x), mul(y, Sta(3)))


def test_fral_unit_literals():
    goal = parse_expr('0 + (x + 1) = x').goal
    assert goal.lhs == mul(App(UNIT), mul(x, App(UNIT)))
    assert parse_expr('ε + x = x').goal.lhs == mul(App(UNIT), x)


def test_precedence_and_postfix():
    assert parse_expr('x + y + z = x').goal.lhs == mul(mul(x, y), z)
    assert parse_expr('x + y * z = x').goal.lhs == mul(x, mul(y, z))
    assert parse_expr("x′′ = x'").goal.lhs == inv(inv(x))
    assert parse_expr("x' = x").goal.lhs == inv(x)
    assert parse_expr('inv(x + y) = (x + y)′').goal.rhs == inv(mul(x, y))
    assert parse_expr('x inv = x').goal.lhs == inv(x)


def test_variables_numbered_by_first_occurrence():
    parsed = parse_expr('b + a = a + c')
    assert parsed.names == ('b', 'a', 'c')
    assert parsed.goal.lhs == mul(x, y)
    assert parsed.goal.rhs == mul(y, z)


def test_literals():
    assert parse_expr('"ab" + x = x', string_rev().literal).goal.lhs == mul(Sta('ab'), x)
    matrix = parse_expr('[[1, 2], [0, 1]] = x', get_algebra('matrix2-mul').literal).goal.lhs
    assert matrix == Sta(((1, 2), (0, 1)))
    assert parse_expr('[] + x = x', get_algebra('list-rev').literal).goal.lhs == mul(Sta(()), x)


def test_tokenize():
    kinds = [t.kind for t in tokenize('inv(x) + [1, [2]] = "a]"′')]
    assert kinds == ['name', 'punct', 'name', 'punct', 'punct', 'bracket', 'punct', 'string', 'punct', 'eof']


@pytest.mark.parametrize('text, alg_name, position', [
    ('x + = y', None, 4),
    ('x = y z', None, 6),
    ('x + y', None, 5),
    ('', None, 0),
    ('[1, 2 = x', 'list-concat', 0),
    ('3 + x = x', None, 0),
    ('x + "ab" = x', 'nat-add', 4),
    ('(x + y = x', None, 7),
    ('x = x # y', None, 6),
])
def test_parse_errors(text, alg_name, position):
    literal = get_algebra(alg_name).literal if alg_name is not None else None
    with pytest.raises(ParseError) as info:
        parse_expr(text, literal)
    assert info.value.position == position


def test_random_terms_reparse(rng):
    alg = string_rev()
    const = lambda r: ''.join(r.choice(list('ab'), size=int(r.integers(0, 3))))  # noqa: E731
    for _ in range(300):
        t = random_term(rng, 3, int(rng.integers(1, 9)), inv_p=0.3, const=const, const_p=0.3)
        text = f'{print_term(t, show=alg.show)} = x0'
        parsed = parse_expr(text, alg.literal)
        # parsing renumbers x0, x1, x2 by first occurrence
        back = tuple(Var(int(name[1:])) for name in parsed.names)
        assert substitute(parsed.goal.lhs, back) == t, text
