from fractions import Fraction
from functools import lru_cache, reduce
from operator import mul

from pyparsing import (
    Forward,
    Opt,
    ParseBaseException,
    ParserElement,
    Regex,
    Suppress,
    ZeroOrMore,
    one_of,
)

from . import ExpressionSyntaxError, UnknownCoordinateError
from .dims import Dims
from .superfunction import Superfunction, canonical_key


__all__ = ['format_expr', 'parse_expr']


def parse_expr(src: str, dims: Dims) -> Superfunction:
    """Parse ``src`` into a canonical superfunction on R^{2l+1|n}.

    Grammar: variables ``z``, ``x<k>``, ``y<k>``, ``th<j>``; rational literals
    ``p`` or ``p/q``; ``+ - * ^`` with ``^`` binding tightest; unary minus.
    """
    try:
        result = _grammar(dims).parse_string(src, parse_all=True)
    except UnknownCoordinateError:
        raise
    except ParseBaseException as exc:
        raise ExpressionSyntaxError(
            f'Invalid expression {src!r}: {exc.msg}', position=exc.loc
        ) from exc
    return result[0]


def format_expr(f: Superfunction) -> str:
    terms = sorted(f.terms.items(), key=lambda item: canonical_key(item[0], f.dims.n))
    if not terms:
        return '0'

    names = [coord.name for coord in f.dims.coords]
    chunks = []
    for monomial, coeff in terms:
        factors = [
            name if exponent == 1 else f'{name}^{exponent}'
            for name, exponent in zip(names, monomial.evens)
            if exponent
        ]
        factors.extend(f'th{j}' for j in monomial.odds)
        magnitude = abs(coeff)
        if not factors:
            text = str(magnitude)
        elif magnitude == 1:
            text = '*'.join(factors)
        else:
            text = '*'.join([str(magnitude), *factors])

        if not chunks:
            chunks.append(f'-{text}' if coeff < 0 else text)
        else:
            chunks.append(f' - {text}' if coeff < 0 else f' + {text}')

    return ''.join(chunks)


@lru_cache(maxsize=None)
def _grammar(dims: Dims) -> ParserElement:
    def number_action(src, loc, tokens):
        try:
            value = Fraction(tokens[0])
        except ZeroDivisionError as exc:
            raise ExpressionSyntaxError(
                f'Zero denominator in {tokens[0]!r}', position=loc
            ) from exc
        return Superfunction.constant(dims, value)

    def variable_action(src, loc, tokens):
        try:
            coord = dims.coord_by_name(tokens[0])
        except UnknownCoordinateError as exc:
            raise UnknownCoordinateError(f'{exc} (at position {loc})') from exc
        return Superfunction.coordinate(dims, coord)

    def power_action(src, loc, tokens):
        if len(tokens) == 1:
            return tokens[0]
        return tokens[0] ** int(tokens[1])

    def sum_action(src, loc, tokens):
        total = tokens[0]
        for op, operand in zip(tokens[1::2], tokens[2::2]):
            total = total + operand if op == '+' else total - operand
        return total

    # expr := term (('+' | '-') term)*
    # term := unary ('*' unary)*
    # unary := '-' unary | atom ['^' digits]
    # Every alternative is decided by its first token, so nothing is reparsed.
    expr = Forward()
    unary = Forward()
    number = Regex(r'\d+(?:/\d+)?').set_parse_action(number_action)
    variable = Regex(r'[A-Za-z_]\w*').set_parse_action(variable_action)
    atom = number | variable | (Suppress('(') + expr + Suppress(')'))
    power = (atom + Opt(Suppress('^') + Regex(r'\d+'))).set_parse_action(power_action)
    unary <<= (Suppress('-') + unary).set_parse_action(lambda t: -t[0]) | power
    term = (unary + ZeroOrMore(Suppress('*') + unary)).set_parse_action(
        lambda t: reduce(mul, t)
    )
    expr <<= (term + ZeroOrMore(one_of('+ -') + term)).set_parse_action(sum_action)
    return expr
