from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Tuple

from . import InvalidBasisLabelError, SpoFamily
from .matrix import GradedMatrix
from ..grassmann.dims import Dims


@dataclass(frozen=True)
class SpoBasisLabel:
    family: SpoFamily
    i: int
    j: int

    def __str__(self):
        return f'{self.family.value}({self.i},{self.j})'

    def validate(self, dims: Dims) -> 'SpoBasisLabel':
        if (self.i, self.j) not in _family_indices(dims, self.family):
            raise InvalidBasisLabelError(f'{self} is not an spo basis label for {dims}')
        return self


def spo_dim(dims: Dims) -> int:
    l, n = dims.l, dims.n  # noqa: E741
    return (l + 1) * (2 * l + 3) + (2 * l + 2) * n + n * (n - 1) // 2


def basis_labels(dims: Dims) -> Iterator[SpoBasisLabel]:
    for family in SpoFamily:
        for i, j in _family_indices(dims, family):
            yield SpoBasisLabel(family, i, j)


def basis_element(dims: Dims, label: SpoBasisLabel) -> GradedMatrix:
    label.validate(dims)
    half = dims.l + 1
    i, j = label.i, label.j

    def unit(row, col, value=1):
        return GradedMatrix.unit(dims, row, col, value)

    if label.family is SpoFamily.SP1:
        return unit(i, j) - unit(half + j, half + i)
    if label.family is SpoFamily.SP2:
        if i == j:
            return unit(i, half + i)
        return unit(i, half + j) + unit(j, half + i)
    if label.family is SpoFamily.SP3:
        if i == j:
            return unit(half + i, i)
        return unit(half + i, j) + unit(half + j, i)
    if label.family is SpoFamily.ODD_A:
        return unit(i, 2 * half + j) - unit(2 * half + j, i - half)
    if label.family is SpoFamily.ODD_B:
        return unit(i, 2 * half + j) + unit(2 * half + j, half + i)
    return unit(2 * half + i, 2 * half + j) - unit(2 * half + j, 2 * half + i)


@lru_cache(maxsize=None)
def spo_basis(dims: Dims) -> Tuple[Tuple[SpoBasisLabel, GradedMatrix], ...]:
    """The basis of spo(2l+2|n), family by family in label order."""
    return tuple((label, basis_element(dims, label)) for label in basis_labels(dims))


@lru_cache(maxsize=None)
def _family_indices(dims: Dims, family: SpoFamily) -> Tuple[Tuple[int, int], ...]:
    half = dims.l + 1
    even = range(1, half + 1)
    odd = range(1, dims.n + 1)
    if family is SpoFamily.SP1:
        pairs = product(even, even)
    elif family in (SpoFamily.SP2, SpoFamily.SP3):
        pairs = ((i, j) for i, j in product(even, even) if i <= j)
    elif family is SpoFamily.ODD_A:
        pairs = product(range(half + 1, 2 * half + 1), odd)
    elif family is SpoFamily.ODD_B:
        pairs = product(even, odd)
    else:
        pairs = ((i, j) for i, j in product(odd, odd) if i < j)
    return tuple(pairs)
