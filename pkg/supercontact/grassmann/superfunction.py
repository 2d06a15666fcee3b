from fractions import Fraction
from operator import add
from types import MappingProxyType
from typing import Dict, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from . import DimensionMismatchError, UnknownCoordinateError
from .dims import CoordId, Dims


Scalar = Union[int, Fraction]

DEGREE_OF_ZERO = float('-inf')


class Monomial(NamedTuple):
    """``z^a x^b y^c`` times the ordered Grassmann word ``th_{i1}...th_{ip}``.

    ``odds`` is strictly ascending; every sign lives in the coefficient.
    """

    evens: Tuple[int, ...]
    odds: Tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return sum(self.evens) + len(self.odds)

    @property
    def parity(self) -> int:
        return len(self.odds) % 2


def sort_odds(word: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Reorder a Grassmann word ascending.

    Returns ``(sign, word)``; sign is 0 when an index repeats (th_i^2 = 0).
    """
    if len(set(word)) != len(word):
        return 0, ()
    inversions = sum(
        1 for a, left in enumerate(word) for right in word[a + 1:] if left > right
    )
    return (-1 if inversions % 2 else 1), tuple(sorted(word))


def merge_odds(left: Tuple[int, ...], right: Tuple[int, ...]) -> Tuple[int, tuple]:
    """Concatenate two ascending Grassmann words and sort the result.

    Returns ``(sign, word)``; sign is 0 when an index repeats.
    """
    if not left or not right:
        return 1, left or right
    if not set(left).isdisjoint(right):
        return 0, ()
    inversions = sum(1 for i in left for j in right if i > j)
    return (-1 if inversions % 2 else 1), tuple(sorted(left + right))


def canonical_key(monomial: Monomial, n: int) -> tuple:
    """Graded lexicographic key over z < x1 < ... < y1 < ... < th1 < ..."""
    odd_exponents = tuple(-1 if j in monomial.odds else 0 for j in range(1, n + 1))
    return (
        monomial.degree,
        tuple(-e for e in monomial.evens) + odd_exponents,
    )


class Superfunction:
    """Polynomial superfunction on R^{2l+1|n} with exact rational coefficients.

    Values are immutable; equal functions have equal term maps.
    """

    __slots__ = ('_dims', '_terms')

    def __init__(self, dims: Dims, terms: Mapping[Monomial, Scalar] = None):
        self._dims = dims
        self._terms = {}
        for (evens, odds), coeff in (terms or {}).items():
            evens = tuple(evens)
            if len(evens) != dims.even_count:
                raise DimensionMismatchError(len(evens), dims.even_count)
            if any(not 1 <= j <= dims.n for j in odds):
                raise UnknownCoordinateError(
                    f'Grassmann word {tuple(odds)} has an index outside [1, {dims.n}]'
                )
            sign, odds = sort_odds(tuple(odds))
            if not sign or not coeff:
                continue
            key = Monomial(evens, odds)
            self._terms[key] = self._terms.get(key, 0) + sign * Fraction(coeff)
        self._terms = {m: c for m, c in self._terms.items() if c}

    @classmethod
    def _build(cls, dims: Dims, terms: Dict[Monomial, Fraction]) -> 'Superfunction':
        sf = cls.__new__(cls)
        sf._dims = dims
        sf._terms = {m: c for m, c in terms.items() if c}
        return sf

    @classmethod
    def zero(cls, dims: Dims) -> 'Superfunction':
        return cls._build(dims, {})

    @classmethod
    def constant(cls, dims: Dims, value: Scalar) -> 'Superfunction':
        return cls._build(dims, {_unit_monomial(dims): Fraction(value)})

    @classmethod
    def coordinate(cls, dims: Dims, coord: CoordId) -> 'Superfunction':
        if coord.parity:
            dims.theta(coord.index)
            monomial = Monomial(_zeros(dims), (coord.index,))
            return cls._build(dims, {monomial: Fraction(1)})
        evens = list(_zeros(dims))
        evens[dims.even_slot(coord)] = 1
        return cls._build(dims, {Monomial(tuple(evens)): Fraction(1)})

    @property
    def dims(self) -> Dims:
        return self._dims

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Superfunction):
            return self._dims == other._dims and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Superfunction.constant(self._dims, other)
        return NotImplemented

    def __hash__(self):
        return hash((self._dims, frozenset(self._terms.items())))

    def __repr__(self):
        from .expressions import format_expr

        return f'Superfunction({self._dims}, {format_expr(self)!r})'

    def __str__(self):
        from .expressions import format_expr

        return format_expr(self)

    def _coerce(self, other) -> Optional['Superfunction']:
        if isinstance(other, Superfunction):
            if other._dims != self._dims:
                raise DimensionMismatchError(self._dims, other._dims)
            return other
        if isinstance(other, (int, Fraction)):
            return Superfunction.constant(self._dims, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coeff in other._terms.items():
            terms[monomial] = terms.get(monomial, 0) + coeff
        return Superfunction._build(self._dims, terms)

    __radd__ = __add__

    def __neg__(self):
        return Superfunction._build(self._dims, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor: Scalar) -> 'Superfunction':
        factor = Fraction(factor)
        return Superfunction._build(
            self._dims, {m: c * factor for m, c in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for left, c1 in self._terms.items():
            for right, c2 in other._terms.items():
                sign, odds = merge_odds(left.odds, right.odds)
                if not sign:
                    continue
                monomial = Monomial(tuple(map(add, left.evens, right.evens)), odds)
                terms[monomial] = terms.get(monomial, 0) + sign * c1 * c2
        return Superfunction._build(self._dims, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f'Exponent must be a nonnegative integer: {exponent!r}')
        result = Superfunction.constant(self._dims, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def parity_parts(self) -> Tuple['Superfunction', 'Superfunction']:
        even, odd = {}, {}
        for monomial, coeff in self._terms.items():
            (odd if monomial.parity else even)[monomial] = coeff
        return (
            Superfunction._build(self._dims, even),
            Superfunction._build(self._dims, odd),
        )

    @property
    def parity(self) -> Optional[int]:
        """Parity of a homogeneous function, None when it is mixed. Zero is even."""
        parities = {m.parity for m in self._terms}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def degree(self) -> Union[int, float]:
        """Total degree in z, x, y and th jointly; -inf for zero."""
        return max((m.degree for m in self._terms), default=DEGREE_OF_ZERO)

    def partial_even(self, coord: CoordId) -> 'Superfunction':
        slot = self._dims.even_slot(coord)
        terms = {}
        for monomial, coeff in self._terms.items():
            exponent = monomial.evens[slot]
            if not exponent:
                continue
            evens = list(monomial.evens)
            evens[slot] -= 1
            key = Monomial(tuple(evens), monomial.odds)
            terms[key] = terms.get(key, 0) + coeff * exponent
        return Superfunction._build(self._dims, terms)

    def partial_odd(self, j: int) -> 'Superfunction':
        """Left Grassmann derivative with respect to th_j."""
        if not 1 <= j <= self._dims.n:
            raise UnknownCoordinateError(
                f'Odd index {j} out of range [1, {self._dims.n}]'
            )
        terms = {}
        for monomial, coeff in self._terms.items():
            if j not in monomial.odds:
                continue
            position = monomial.odds.index(j)
            odds = monomial.odds[:position] + monomial.odds[position + 1:]
            key = Monomial(monomial.evens, odds)
            terms[key] = terms.get(key, 0) + (-coeff if position % 2 else coeff)
        return Superfunction._build(self._dims, terms)

    def derivative(self, coord: CoordId) -> 'Superfunction':
        if coord.parity:
            return self.partial_odd(coord.index)
        return self.partial_even(coord)


def _zeros(dims: Dims) -> Tuple[int, ...]:
    return (0,) * dims.even_count


def _unit_monomial(dims: Dims) -> Monomial:
    return Monomial(_zeros(dims))
