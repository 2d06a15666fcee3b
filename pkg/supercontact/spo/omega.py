from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from . import MatrixShapeError
from .matrix import GradedMatrix, index_parity, matrix_size
from ..grassmann import DimensionMismatchError
from ..grassmann.dims import Dims


@dataclass(frozen=True)
class OmegaStructure:
    """The form ``omega(U, V) = V^t G U`` with ``G = diag(J, id_n)``."""

    dims: Dims

    @property
    def j(self) -> sympy.Matrix:
        half = self.dims.l + 1
        identity = sympy.eye(half)
        zero = sympy.zeros(half)
        return sympy.Matrix.vstack(
            sympy.Matrix.hstack(zero, -identity),
            sympy.Matrix.hstack(identity, zero),
        )

    @property
    def g(self) -> GradedMatrix:
        half = self.dims.l + 1
        size = matrix_size(self.dims)
        rows = [[0] * size for _ in range(size)]
        for k in range(half):
            rows[k][half + k] = -1
            rows[half + k][k] = 1
        for k in range(2 * half, size):
            rows[k][k] = 1
        return GradedMatrix(self.dims, rows)


def omega_form(s: OmegaStructure, u: Sequence, v: Sequence) -> Fraction:
    size = matrix_size(s.dims)
    if len(u) != size or len(v) != size:
        raise MatrixShapeError(
            f'omega expects vectors of length {size}, got {len(u)} and {len(v)}'
        )
    gu = s.g.apply(u)
    return sum((Fraction(a) * b for a, b in zip(v, gu)), Fraction(0))


def preserves_omega(s: OmegaStructure, a: GradedMatrix) -> bool:
    """``omega(A e_a, e_b) + (-1)^{A e_a} omega(e_a, A e_b) = 0`` on basis vectors.

    With ``omega(U, V) = V^t G U`` the two terms are ``(G A)_{ba}`` and
    ``(A^t G)_{ba}``.
    """
    if a.dims != s.dims:
        raise DimensionMismatchError(s.dims, a.dims)
    g = s.g
    for parity, part in a.homogeneous_parts():
        left = g @ part
        right = part.transpose() @ g
        for col in range(part.size):
            sign = -1 if parity and index_parity(s.dims, col) else 1
            for row in range(part.size):
                if left[row, col] + sign * right[row, col]:
                    return False
    return True


def is_spo_blocks(a: GradedMatrix) -> bool:
    """``A_1^t J + J A_1 = 0``, ``A_4^t + A_4 = 0`` and ``A_3 = -A_2^t J``."""
    j = OmegaStructure(a.dims).j
    a1, a2, a3, a4 = a.blocks()
    return (
        (a1.T * j + j * a1).is_zero_matrix
        and (a4.T + a4).is_zero_matrix
        and (a3 + a2.T * j).is_zero_matrix
    )
