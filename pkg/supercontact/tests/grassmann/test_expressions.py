from fractions import Fraction
from time import monotonic

import pytest
from hypothesis import given

from supercontact.grassmann import ExpressionSyntaxError, UnknownCoordinateError
from supercontact.grassmann.dims import Dims
from supercontact.grassmann.expressions import format_expr, parse_expr
from supercontact.grassmann.superfunction import Monomial, Superfunction
from supercontact.tests.strategies import superfunctions


DIMS = Dims(1, 2)


@pytest.mark.parametrize(
    'src,expected',
    [
        ('z^2 + 2*x1*y1', 'z^2 + 2*x1*y1'),
        ('2*x1*y1 + z^2', 'z^2 + 2*x1*y1'),
        ('th2*th1', '-th1*th2'),
        ('th1*th1', '0'),
        ('z', 'z'),
        ('0', '0'),
        ('1/2*th1', '1/2*th1'),
        ('-(z - 1)', '1 - z'),
        ('--z', 'z'),
        ('(x1 + y1)^2', 'x1^2 + 2*x1*y1 + y1^2'),
        ('2*3^2', '18'),
        ('x1 - x1', '0'),
        ('th1 + z*th2 + x1', 'x1 + th1 + z*th2'),
        ('  z  *  x1 ', 'z*x1'),
        ('4/6', '2/3'),
        ('-3/2*y1*th1*th2', '-3/2*y1*th1*th2'),
    ],
)
def test_parse_and_format(src, expected):
    assert format_expr(parse_expr(src, DIMS)) == expected


def test_parse_terms():
    f = parse_expr('z^2 + 2*x1*y1', DIMS)
    assert f.terms == {
        Monomial((2, 0, 0)): Fraction(1),
        Monomial((0, 1, 1)): Fraction(2),
    }


def test_format_zero():
    assert format_expr(Superfunction.zero(DIMS)) == '0'


@pytest.mark.parametrize('depth', [1, 6, 12])
def test_nested_parentheses(depth):
    src = '(' * depth + 'x1 + th1' + ')' * depth
    started = monotonic()
    assert format_expr(parse_expr(f'-{src}*{src}', DIMS)) == '-x1^2 - 2*x1*th1'
    assert monotonic() - started < 2


def test_power_binds_tighter_than_unary_minus():
    assert parse_expr('-x1^2', DIMS) == -(parse_expr('x1', DIMS) ** 2)
    assert parse_expr('2*-z', DIMS) == parse_expr('-2*z', DIMS)

@pytest.mark.parametrize('src', ['', 'z +', '2**z', '(z', 'z)', '1.5', 'z^', 'z^-1'])
def test_syntax_errors(src):
    with pytest.raises(ExpressionSyntaxError):
        parse_expr(src, DIMS)


def test_syntax_error_position():
    with pytest.raises(ExpressionSyntaxError) as exc_info:
        parse_expr('z + )', DIMS)
    assert exc_info.value.position is not None


def test_zero_denominator():
    with pytest.raises(ExpressionSyntaxError):
        parse_expr('1/0', DIMS)


@pytest.mark.parametrize('src', ['w', 'x2', 'th3', 'x0', 'theta1', 'z1'])
def test_unknown_coordinates(src):
    with pytest.raises(UnknownCoordinateError):
        parse_expr(src, DIMS)


@given(superfunctions(DIMS, max_degree=3))
def test_round_trip(f):
    assert parse_expr(format_expr(f), DIMS) == f
