from itertools import chain
from types import MappingProxyType
from typing import List, Mapping, Tuple

from . import check_same_dims, collect_coefficients
from .vector_fields import SuperVectorField
from ..grassmann.dims import CoordId, Dims
from ..grassmann.expressions import format_expr
from ..grassmann.superfunction import Superfunction


class SuperOneForm:
    """``alpha = sum_j alpha_j dz_j`` with coefficients written left of ``dz_j``."""

    __slots__ = ('_dims', '_coeffs')

    def __init__(self, dims: Dims, coeffs: Mapping[CoordId, Superfunction] = None):
        self._dims = dims
        self._coeffs = collect_coefficients(dims, (coeffs or {}).items())

    @classmethod
    def differential(cls, dims: Dims, coord: CoordId) -> 'SuperOneForm':
        return cls(dims, {coord: Superfunction.constant(dims, 1)})

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

    def __eq__(self, other):
        if not isinstance(other, SuperOneForm):
            return NotImplemented
        return self._dims == other._dims and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._dims, frozenset(self._coeffs.items())))

    def __repr__(self):
        terms = ' + '.join(
            f'({format_expr(coeff)})*d{coord.name}'
            for coord, coeff in self._coeffs.items()
        )
        return f'SuperOneForm({self._dims}, {terms or "0"!r})'

    def __add__(self, other):
        if not isinstance(other, SuperOneForm):
            return NotImplemented
        check_same_dims(self._dims, other._dims)
        merged = collect_coefficients(
            self._dims, chain(self._coeffs.items(), other._coeffs.items())
        )
        return SuperOneForm(self._dims, merged)

    def parity_parts(self) -> Tuple['SuperOneForm', 'SuperOneForm']:
        """Split into (even, odd); ``dtheta_j`` is odd."""
        parts = ({}, {})
        for coord, coeff in self._coeffs.items():
            for parity, piece in enumerate(coeff.parity_parts()):
                if piece:
                    parts[(parity + coord.parity) % 2][coord] = piece
        return SuperOneForm(self._dims, parts[0]), SuperOneForm(self._dims, parts[1])

    def homogeneous_parts(self) -> List[Tuple[int, 'SuperOneForm']]:
        return [
            (parity, part)
            for parity, part in enumerate(self.parity_parts())
            if part._coeffs
        ]


def pairing(field: SuperVectorField, form: SuperOneForm) -> Superfunction:
    """``<X, alpha> = sum_i (-1)^{i(alpha_i + i)} X^i alpha_i``."""
    check_same_dims(field.dims, form.dims)
    result = Superfunction.zero(field.dims)
    for coord, x_coeff in field.coeffs.items():
        if coord not in form.coeffs:
            continue
        for parity, a_coeff in enumerate(form.coeffs[coord].parity_parts()):
            if not a_coeff:
                continue
            term = x_coeff * a_coeff
            if coord.parity and not parity:
                term = -term
            result = result + term
    return result


def form_eval(form: SuperOneForm, field: SuperVectorField) -> Superfunction:
    """``alpha(X) = (-1)^{X alpha} <X, alpha>`` over homogeneous parts."""
    check_same_dims(field.dims, form.dims)
    result = Superfunction.zero(field.dims)
    for x_parity, x_part in field.homogeneous_parts():
        for a_parity, a_part in form.homogeneous_parts():
            value = pairing(x_part, a_part)
            result = result + (-value if x_parity and a_parity else value)
    return result
