from typing import Dict, Iterable, Tuple

from ..grassmann import DimensionMismatchError, UnknownCoordinateError
from ..grassmann.dims import CoordId, Dims
from ..grassmann.superfunction import Superfunction


def check_same_dims(left: Dims, right: Dims):
    if left != right:
        raise DimensionMismatchError(left, right)


def collect_coefficients(
    dims: Dims,
    coeffs: Iterable[Tuple[CoordId, Superfunction]],
) -> Dict[CoordId, Superfunction]:
    """Validate a coordinate -> coefficient listing and drop zero entries.

    Repeated coordinates are summed. Keys come back in canonical order.
    """
    collected = {}
    for coord, coeff in coeffs:
        dims.position(coord)
        if not isinstance(coeff, Superfunction):
            raise TypeError(f'Coefficient of {coord} must be a Superfunction')
        check_same_dims(dims, coeff.dims)
        collected[coord] = collected[coord] + coeff if coord in collected else coeff

    return {
        coord: collected[coord]
        for coord in dims.coords
        if coord in collected and collected[coord]
    }


__all__ = [
    'DimensionMismatchError',
    'UnknownCoordinateError',
    'check_same_dims',
    'collect_coefficients',
]
