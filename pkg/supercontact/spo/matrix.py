from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from . import MatrixShapeError
from ..grassmann import DimensionMismatchError
from ..grassmann.dims import Dims


Scalar = Union[int, Fraction]


def matrix_size(dims: Dims) -> int:
    return 2 * dims.l + 2 + dims.n


def index_parity(dims: Dims, index: int) -> int:
    """Parity of the 0-based row/column ``index``; the first 2l+2 are even."""
    return 0 if index < 2 * dims.l + 2 else 1


class GradedMatrix:
    """Square rational matrix of gl(2l+2|n).

    ``entries`` is 0-based; the block names A_1..A_4 refer to the
    (2l+2 | n) split of rows and columns.
    """

    __slots__ = ('_dims', '_entries')

    def __init__(self, dims: Dims, entries: Iterable[Iterable[Scalar]]):
        rows = tuple(tuple(Fraction(value) for value in row) for row in entries)
        size = matrix_size(dims)
        if len(rows) != size or any(len(row) != size for row in rows):
            raise MatrixShapeError(
                f'Expected a {size}x{size} matrix for {dims}, got '
                f'{len(rows)} rows of lengths {sorted({len(row) for row in rows})}'
            )
        self._dims = dims
        self._entries = rows

    @classmethod
    def zero(cls, dims: Dims) -> 'GradedMatrix':
        size = matrix_size(dims)
        return cls(dims, [[0] * size for _ in range(size)])

    @classmethod
    def identity(cls, dims: Dims) -> 'GradedMatrix':
        size = matrix_size(dims)
        return cls(dims, [[int(i == j) for j in range(size)] for i in range(size)])

    @classmethod
    def unit(cls, dims: Dims, i: int, j: int, value: Scalar = 1) -> 'GradedMatrix':
        """``value * E_{i,j}`` with 1-based ``i`` and ``j``."""
        size = matrix_size(dims)
        if not (1 <= i <= size and 1 <= j <= size):
            raise MatrixShapeError(f'Matrix unit ({i}, {j}) out of range for {dims}')
        rows = [[0] * size for _ in range(size)]
        rows[i - 1][j - 1] = value
        return cls(dims, rows)

    @property
    def dims(self) -> Dims:
        return self._dims

    @property
    def size(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._entries

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        return self._entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self._dims == other._dims and self._entries == other._entries

    def __hash__(self):
        return hash((self._dims, self._entries))

    def __repr__(self):
        rows = '; '.join(' '.join(str(value) for value in row) for row in self._entries)
        return f'GradedMatrix({self._dims}, [{rows}])'

    def __bool__(self):
        return any(any(row) for row in self._entries)

    def _check(self, other: 'GradedMatrix'):
        if self._dims != other._dims:
            raise DimensionMismatchError(self._dims, other._dims)

    def _map(self, func) -> 'GradedMatrix':
        return GradedMatrix(
            self._dims,
            [
                [func(i, j, value) for j, value in enumerate(row)]
                for i, row in enumerate(self._entries)
            ],
        )

    def __add__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check(other)
        return self._map(lambda i, j, value: value + other._entries[i][j])

    def __neg__(self):
        return self._map(lambda i, j, value: -value)

    def __sub__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self._map(lambda i, j, value: value * other)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check(other)
        columns = list(zip(*other._entries))
        return GradedMatrix(
            self._dims,
            [
                [
                    sum(a * b for a, b in zip(row, column) if a and b)
                    for column in columns
                ]
                for row in self._entries
            ],
        )

    def transpose(self) -> 'GradedMatrix':
        return GradedMatrix(self._dims, zip(*self._entries))

    def apply(self, vector: Sequence[Scalar]) -> List[Fraction]:
        if len(vector) != self.size:
            raise MatrixShapeError(
                f'Expected a vector of length {self.size}, got {len(vector)}'
            )
        return [
            sum(a * Fraction(b) for a, b in zip(row, vector)) for row in self._entries
        ]

    def parity_parts(self) -> Tuple['GradedMatrix', 'GradedMatrix']:
        """(even, odd): diagonal blocks vs. off-diagonal blocks."""
        dims = self._dims

        def part(parity):
            return self._map(
                lambda i, j, value: value
                if (index_parity(dims, i) + index_parity(dims, j)) % 2 == parity
                else 0
            )

        return part(0), part(1)

    def homogeneous_parts(self) -> List[Tuple[int, 'GradedMatrix']]:
        return [
            (parity, part) for parity, part in enumerate(self.parity_parts()) if part
        ]

    @property
    def parity(self) -> Optional[int]:
        parts = self.homogeneous_parts()
        if len(parts) > 1:
            return None
        return parts[0][0] if parts else 0

    def blocks(self) -> Tuple[sympy.Matrix, sympy.Matrix, sympy.Matrix, sympy.Matrix]:
        """The blocks (A_1, A_2, A_3, A_4) as exact sympy matrices."""
        even = 2 * self._dims.l + 2
        full = self.to_sympy()
        return (
            full[:even, :even],
            full[:even, even:],
            full[even:, :even],
            full[even:, even:],
        )

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(
            [[to_rational(value) for value in row] for row in self._entries]
        )

    def flatten(self) -> Tuple[Fraction, ...]:
        return tuple(value for row in self._entries for value in row)


def to_rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def mat_bracket(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """``AB - (-1)^{AB} BA`` summed over homogeneous parts."""
    a._check(b)
    result = GradedMatrix.zero(a.dims)
    for a_parity, a_part in a.homogeneous_parts():
        for b_parity, b_part in b.homogeneous_parts():
            if a_parity and b_parity:
                result = result + a_part @ b_part + b_part @ a_part
            else:
                result = result + a_part @ b_part - b_part @ a_part
    return result
