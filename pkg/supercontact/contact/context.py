from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from . import ContactStructureError
from ..fields.forms import SuperOneForm, form_eval
from ..fields.vector_fields import SuperVectorField
from ..grassmann.dims import Dims, Z
from ..grassmann.superfunction import Superfunction


RationalMatrix = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class ContactContext:
    """The standard contact structure of R^{2l+1|n}.

    Frame and omega matrices use 1-based generalized indices r in [1, 2l+n],
    stored 0-based.
    """

    dims: Dims
    alpha: SuperOneForm
    frame: Tuple[SuperVectorField, ...]
    omega_lower: RationalMatrix
    omega_upper: RationalMatrix
    reeb: SuperVectorField

    def q(self, r: int) -> Superfunction:
        """Generalized coordinate function q^r; q^0 is z."""
        return Superfunction.coordinate(self.dims, self.dims.generalized(r))

    def t(self, r: int) -> SuperVectorField:
        """Frame element T_r; T_0 is the Reeb field."""
        self.dims.generalized(r)
        return self.frame[r - 1] if r else self.reeb

    def parity(self, r: int) -> int:
        return self.dims.generalized(r).parity

    def lower(self, r: int, s: int) -> Fraction:
        return self.omega_lower[r - 1][s - 1]

    def upper(self, r: int, s: int) -> Fraction:
        return self.omega_upper[r - 1][s - 1]

    def partner(self, r: int) -> int:
        """The single s with omega^{rs} != 0."""
        row = self.omega_upper[r - 1]
        return next(s for s, value in enumerate(row, 1) if value)

    @property
    def indices(self) -> range:
        return range(1, self.dims.generalized_count + 1)


def standard_alpha(dims: Dims) -> SuperOneForm:
    """``dz + sum(x_i dy_i - y_i dx_i) + sum theta_j dtheta_j``."""
    coeffs = {Z: Superfunction.constant(dims, 1)}
    for k in range(1, dims.l + 1):
        coeffs[dims.x(k)] = -Superfunction.coordinate(dims, dims.y(k))
        coeffs[dims.y(k)] = Superfunction.coordinate(dims, dims.x(k))
    for j in range(1, dims.n + 1):
        coeffs[dims.theta(j)] = Superfunction.coordinate(dims, dims.theta(j))
    return SuperOneForm(dims, coeffs)


def omega_matrices(dims: Dims) -> Tuple[RationalMatrix, RationalMatrix]:
    size, l = dims.generalized_count, dims.l  # noqa: E741
    lower = [[Fraction(0)] * size for _ in range(size)]
    upper = [[Fraction(0)] * size for _ in range(size)]
    for k in range(l):
        lower[k][l + k], lower[l + k][k] = Fraction(1), Fraction(-1)
        upper[k][l + k], upper[l + k][k] = Fraction(-1), Fraction(1)
    for j in range(2 * l, size):
        lower[j][j] = upper[j][j] = Fraction(1)
    return tuple(map(tuple, lower)), tuple(map(tuple, upper))


@lru_cache(maxsize=None)
def make_context(dims: Dims) -> ContactContext:
    omega_lower, omega_upper = omega_matrices(dims)
    reeb = SuperVectorField.partial(dims, Z)

    frame = []
    for r in range(1, dims.generalized_count + 1):
        # T_r = d/dq^r - omega_{kr} q^k d/dz
        z_coeff = Superfunction.zero(dims)
        for k in range(1, dims.generalized_count + 1):
            if omega_lower[k - 1][r - 1]:
                coord = Superfunction.coordinate(dims, dims.generalized(k))
                z_coeff = z_coeff - coord.scale(omega_lower[k - 1][r - 1])
        frame.append(
            SuperVectorField(
                dims,
                {dims.generalized(r): Superfunction.constant(dims, 1), Z: z_coeff},
            )
        )

    ctx = ContactContext(
        dims=dims,
        alpha=standard_alpha(dims),
        frame=tuple(frame),
        omega_lower=omega_lower,
        omega_upper=omega_upper,
        reeb=reeb,
    )
    _check_context(ctx)
    return ctx


def _check_context(ctx: ContactContext):
    size = ctx.dims.generalized_count
    for r in ctx.indices:
        for k in ctx.indices:
            product = sum(ctx.lower(r, s) * ctx.upper(s, k) for s in ctx.indices)
            if product != (1 if r == k else 0):
                raise ContactStructureError(
                    f'omega_lower * omega_upper differs from identity at ({r}, {k})'
                )
            sign = -1 if ctx.parity(r) and ctx.parity(k) else 1
            if ctx.upper(r, k) != -sign * ctx.upper(k, r):
                raise ContactStructureError(
                    f'omega_upper is not super-antisymmetric at ({r}, {k})'
                )

    for r, element in enumerate(ctx.frame, 1):
        if form_eval(ctx.alpha, element):
            raise ContactStructureError(f'alpha(T_{r}) != 0')

    if form_eval(ctx.alpha, ctx.reeb) != Superfunction.constant(ctx.dims, 1):
        raise ContactStructureError('alpha(T_0) != 1')

    if len(ctx.frame) != size:
        raise ContactStructureError(
            f'Frame has {len(ctx.frame)} elements, expected {size}'
        )
