from fractions import Fraction
from types import MappingProxyType
from typing import List, Mapping, Optional, Tuple, Union

from . import check_same_dims, collect_coefficients
from ..grassmann.dims import CoordId, Dims
from ..grassmann.expressions import format_expr
from ..grassmann.superfunction import Superfunction


class SuperVectorField:
    """A derivation ``X = sum_i X^i d/dz_i`` with coefficients on the left."""

    __slots__ = ('_dims', '_coeffs')

    def __init__(self, dims: Dims, coeffs: Mapping[CoordId, Superfunction] = None):
        self._dims = dims
        self._coeffs = collect_coefficients(dims, (coeffs or {}).items())

    @classmethod
    def _build(cls, dims: Dims, coeffs: Mapping[CoordId, Superfunction]):
        field = cls.__new__(cls)
        field._dims = dims
        field._coeffs = {
            coord: coeffs[coord]
            for coord in dims.coords
            if coord in coeffs and coeffs[coord]
        }
        return field

    @classmethod
    def zero(cls, dims: Dims) -> 'SuperVectorField':
        return cls._build(dims, {})

    @classmethod
    def partial(cls, dims: Dims, coord: CoordId) -> 'SuperVectorField':
        dims.position(coord)
        return cls._build(dims, {coord: Superfunction.constant(dims, 1)})

    @property
    def dims(self) -> Dims:
        return self._dims

    @property
    def coeffs(self) -> Mapping[CoordId, Superfunction]:
        return MappingProxyType(self._coeffs)

    def coefficient(self, coord: CoordId) -> Superfunction:
        try:
            return self._coeffs[coord]
        except KeyError:
            self._dims.position(coord)
            return Superfunction.zero(self._dims)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, SuperVectorField):
            return NotImplemented
        return self._dims == other._dims and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._dims, frozenset(self._coeffs.items())))

    def __repr__(self):
        return f'SuperVectorField({self._dims}, {format_field(self)!r})'

    def __str__(self):
        return format_field(self)

    def __add__(self, other):
        if not isinstance(other, SuperVectorField):
            return NotImplemented
        check_same_dims(self._dims, other._dims)
        coeffs = dict(self._coeffs)
        for coord, coeff in other._coeffs.items():
            coeffs[coord] = coeffs[coord] + coeff if coord in coeffs else coeff
        return SuperVectorField._build(self._dims, coeffs)

    def __neg__(self):
        return SuperVectorField._build(
            self._dims, {coord: -coeff for coord, coeff in self._coeffs.items()}
        )

    def __sub__(self, other):
        if not isinstance(other, SuperVectorField):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, other: Union[Superfunction, int, Fraction]):
        """Left multiplication ``f * X`` by a function or a scalar."""
        if isinstance(other, (int, Fraction)):
            other = Superfunction.constant(self._dims, other)
        if not isinstance(other, Superfunction):
            return NotImplemented
        check_same_dims(self._dims, other.dims)
        return SuperVectorField._build(
            self._dims, {coord: other * coeff for coord, coeff in self._coeffs.items()}
        )

    def scale(self, factor: Union[int, Fraction]) -> 'SuperVectorField':
        return SuperVectorField._build(
            self._dims,
            {coord: coeff.scale(factor) for coord, coeff in self._coeffs.items()},
        )

    def parity_parts(self) -> Tuple['SuperVectorField', 'SuperVectorField']:
        """Split into (even, odd); a term X^i d/dz_i has parity X^i + parity(z_i)."""
        parts = ({}, {})
        for coord, coeff in self._coeffs.items():
            for parity, piece in enumerate(coeff.parity_parts()):
                if piece:
                    parts[(parity + coord.parity) % 2][coord] = piece
        return (
            SuperVectorField._build(self._dims, parts[0]),
            SuperVectorField._build(self._dims, parts[1]),
        )

    def homogeneous_parts(self) -> List[Tuple[int, 'SuperVectorField']]:
        return [
            (parity, part) for parity, part in enumerate(self.parity_parts()) if part
        ]

    @property
    def parity(self) -> Optional[int]:
        parts = self.homogeneous_parts()
        if len(parts) > 1:
            return None
        return parts[0][0] if parts else 0

    def apply(self, f: Superfunction) -> Superfunction:
        check_same_dims(self._dims, f.dims)
        result = Superfunction.zero(self._dims)
        for coord, coeff in self._coeffs.items():
            derivative = f.derivative(coord)
            if derivative:
                result = result + coeff * derivative
        return result

    __call__ = apply

    def bracket(self, other: 'SuperVectorField') -> 'SuperVectorField':
        """Lie superbracket, computed coordinate-wise per parity part:

        ``[X, Y]^i = X(Y^i) - (-1)^{XY} Y(X^i)``.
        """
        check_same_dims(self._dims, other._dims)
        coeffs = {}
        for x_parity, x_part in self.homogeneous_parts():
            for y_parity, y_part in other.homogeneous_parts():
                sign = -1 if x_parity and y_parity else 1
                for coord in set(x_part._coeffs) | set(y_part._coeffs):
                    value = x_part.apply(y_part.coefficient(coord)) - y_part.apply(
                        x_part.coefficient(coord)
                    ).scale(sign)
                    coeffs[coord] = coeffs[coord] + value if coord in coeffs else value
        return SuperVectorField._build(self._dims, coeffs)


def format_field(field: SuperVectorField) -> str:
    if not field:
        return '0'
    return ' + '.join(
        f'({format_expr(coeff)})*d/d{coord.name}'
        for coord, coeff in field.coeffs.items()
    )
