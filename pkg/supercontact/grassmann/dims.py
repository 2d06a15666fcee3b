import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from . import CoordKind, InvalidDimsError, UnknownCoordinateError


_COORD_NAME = re.compile(r'(z)|(x|y|th)([1-9]\d*)')


@dataclass(frozen=True)
class CoordId:
    """A Darboux coordinate of R^{2l+1|n}: z, x_k, y_k or theta_j."""

    kind: CoordKind
    index: int = 0

    @property
    def parity(self) -> int:
        return 1 if self.kind is CoordKind.THETA else 0

    @property
    def name(self) -> str:
        if self.kind is CoordKind.Z:
            return 'z'
        return f'{self.kind.value}{self.index}'

    def __str__(self):
        return self.name


Z = CoordId(CoordKind.Z)


@dataclass(frozen=True)
class Dims:
    """Dimensions (l, n) of the superspace R^{2l+1|n}."""

    l: int  # noqa: E741
    n: int

    def __post_init__(self):
        if not isinstance(self.l, int) or self.l < 0:
            raise InvalidDimsError(f'l must be a nonnegative integer, got {self.l!r}')
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidDimsError(f'n must be a positive integer, got {self.n!r}')

    def __str__(self):
        return f'(l={self.l}, n={self.n})'

    @property
    def even_count(self) -> int:
        return 2 * self.l + 1

    @property
    def generalized_count(self) -> int:
        return 2 * self.l + self.n

    @property
    def coords(self) -> Tuple[CoordId, ...]:
        """All coordinates in canonical order z, x1..xl, y1..yl, th1..thn."""
        return _coords(self)

    @property
    def even_coords(self) -> Tuple[CoordId, ...]:
        return self.coords[: self.even_count]

    def x(self, k: int) -> CoordId:
        return self._checked(CoordId(CoordKind.X, k))

    def y(self, k: int) -> CoordId:
        return self._checked(CoordId(CoordKind.Y, k))

    def theta(self, j: int) -> CoordId:
        return self._checked(CoordId(CoordKind.THETA, j))

    def generalized(self, r: int) -> CoordId:
        """The coordinate q^r, r in [0, 2l+n]; q^0 is z."""
        if not 0 <= r <= self.generalized_count:
            raise UnknownCoordinateError(
                f'Generalized index {r} out of range [0, {self.generalized_count}]'
            )
        if r == 0:
            return Z
        if r <= self.l:
            return CoordId(CoordKind.X, r)
        if r <= 2 * self.l:
            return CoordId(CoordKind.Y, r - self.l)
        return CoordId(CoordKind.THETA, r - 2 * self.l)

    def position(self, coord: CoordId) -> int:
        """Index of ``coord`` in the canonical coordinate order."""
        try:
            return _positions(self)[coord]
        except KeyError:
            raise UnknownCoordinateError(f'Unknown coordinate {coord} for {self}')

    def even_slot(self, coord: CoordId) -> int:
        if coord.parity:
            raise UnknownCoordinateError(f'{coord} is not an even coordinate')
        return self.position(coord)

    def coord_by_name(self, name: str) -> CoordId:
        match = _COORD_NAME.fullmatch(name)
        if not match:
            raise UnknownCoordinateError(f'Unknown variable: {name}')
        if match.group(1):
            return Z
        kind = CoordKind(match.group(2))
        return self._checked(CoordId(kind, int(match.group(3))))

    def _checked(self, coord: CoordId) -> CoordId:
        if coord not in _positions(self):
            raise UnknownCoordinateError(f'Unknown variable {coord} for {self}')
        return coord


@lru_cache(maxsize=None)
def _coords(dims: Dims) -> Tuple[CoordId, ...]:
    return (
        Z,
        *(CoordId(CoordKind.X, k) for k in range(1, dims.l + 1)),
        *(CoordId(CoordKind.Y, k) for k in range(1, dims.l + 1)),
        *(CoordId(CoordKind.THETA, j) for j in range(1, dims.n + 1)),
    )


@lru_cache(maxsize=None)
def _positions(dims: Dims) -> Dict[CoordId, int]:
    return {coord: i for i, coord in enumerate(_coords(dims))}
