from dataclasses import dataclass

from . import NotInSpoError, NotNormalizedError
from ..contact.context import ContactContext
from ..fields import check_same_dims
from ..fields.vector_fields import SuperVectorField
from ..grassmann.dims import CoordId, Dims, Z
from ..grassmann.superfunction import Superfunction
from ..spo.matrix import GradedMatrix, matrix_size
from ..spo.omega import is_spo_blocks


@dataclass(frozen=True)
class PglRep:
    """Representative of a class in pgl(2l+2|n) with zero (1, 1) corner."""

    matrix: GradedMatrix

    def __post_init__(self):
        if self.matrix[0, 0]:
            raise NotNormalizedError(
                f'Representative corner is {self.matrix[0, 0]}, expected 0'
            )

    @property
    def dims(self) -> Dims:
        return self.matrix.dims


@dataclass(frozen=True)
class CoordMap:
    """Affine chart t^1..t^{2l+1+n} of the projective superspace.

    t^m is the m-th matrix index after the first (0-based index m):
    x_1..x_l, then z, then y_1..y_l, then theta_1..theta_n.
    """

    dims: Dims

    def coord(self, m: int) -> CoordId:
        l = self.dims.l  # noqa: E741
        if not 1 <= m < matrix_size(self.dims):
            raise IndexError(f't-index {m} out of range for {self.dims}')
        if m <= l:
            return self.dims.x(m)
        if m == l + 1:
            return Z
        if m <= 2 * l + 1:
            return self.dims.y(m - l - 1)
        return self.dims.theta(m - 2 * l - 1)

    def parity(self, m: int) -> int:
        return self.coord(m).parity

    def function(self, m: int) -> Superfunction:
        return Superfunction.coordinate(self.dims, self.coord(m))


def normalize_rep(a: GradedMatrix) -> PglRep:
    """``A - A_{11} Id``."""
    return PglRep(a - GradedMatrix.identity(a.dims) * a[0, 0])


def projective_embed(rep: PglRep, cmap: CoordMap) -> SuperVectorField:
    """The projective vector field of a normalized ``[[0, xi], [v, B]]``:

    ``-v^i d_i - (-1)^{j(i+j)} B^i_j t^j d_i + (-1)^j xi_j t^j t^i d_i``.
    """
    dims = rep.dims
    check_same_dims(dims, cmap.dims)
    entries = rep.matrix.entries
    size = matrix_size(dims)
    t = [None] + [cmap.function(m) for m in range(1, size)]

    linear_form = Superfunction.zero(dims)
    for j in range(1, size):
        if entries[0][j]:
            sign = -1 if cmap.parity(j) else 1
            linear_form = linear_form + t[j].scale(sign * entries[0][j])

    coeffs = {}
    for i in range(1, size):
        coeff = Superfunction.constant(dims, -entries[i][0])
        for j in range(1, size):
            if entries[i][j]:
                # (-1)^{j(i+j)} is -1 only for odd t^j and even t^i
                sign = -1 if cmap.parity(j) and not cmap.parity(i) else 1
                coeff = coeff - t[j].scale(sign * entries[i][j])
        coeffs[cmap.coord(i)] = coeff + linear_form * t[i]
    return SuperVectorField(dims, coeffs)


def embed_spo(ctx: ContactContext, a: GradedMatrix) -> SuperVectorField:
    check_same_dims(ctx.dims, a.dims)
    if not is_spo_blocks(a):
        raise NotInSpoError(f'{a!r} does not preserve omega')
    return projective_embed(normalize_rep(a), CoordMap(ctx.dims))
