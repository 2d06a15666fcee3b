from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from . import ContactError, NotContactError
from .context import ContactContext
from ..fields import check_same_dims
from ..fields.forms import form_eval
from ..fields.vector_fields import SuperVectorField
from ..grassmann.dims import Dims, Z
from ..grassmann.superfunction import Superfunction, canonical_key


HALF = Fraction(1, 2)

StructureConstants = Dict[Tuple[int, int], Dict[int, Fraction]]


def is_tangent(ctx: ContactContext, field: SuperVectorField) -> bool:
    check_same_dims(ctx.dims, field.dims)
    return form_eval(ctx.alpha, field).is_zero()


def is_contact(ctx: ContactContext, field: SuperVectorField) -> bool:
    return first_contact_failure(ctx, field) is None


def first_contact_failure(
    ctx: ContactContext, field: SuperVectorField
) -> Optional[Tuple[int, SuperVectorField]]:
    """First frame index r with [X, T_r] outside Tan, with that bracket."""
    check_same_dims(ctx.dims, field.dims)
    for r, element in enumerate(ctx.frame, 1):
        bracket = field.bracket(element)
        if not is_tangent(ctx, bracket):
            return r, bracket
    return None


def contact_field(ctx: ContactContext, f: Superfunction) -> SuperVectorField:
    """``X_f = f d/dz - 1/2 (-1)^{f T_r} omega^{rs} T_r(f) T_s``."""
    check_same_dims(ctx.dims, f.dims)
    result = f * ctx.reeb
    for parity, part in enumerate(f.parity_parts()):
        if not part:
            continue
        for r in ctx.indices:
            derivative = ctx.t(r).apply(part)
            if not derivative:
                continue
            s = ctx.partner(r)
            coeff = -HALF * ctx.upper(r, s)
            if parity and ctx.parity(r):
                coeff = -coeff
            result = result + derivative.scale(coeff) * ctx.t(s)
    return result


def hamiltonian_of(ctx: ContactContext, field: SuperVectorField) -> Superfunction:
    failure = first_contact_failure(ctx, field)
    if failure is not None:
        raise NotContactError(*failure)
    return form_eval(ctx.alpha, field)


def lagrange_bracket(
    ctx: ContactContext, f: Superfunction, g: Superfunction
) -> Superfunction:
    """``{f, g} = f g' - f' g - 1/2 (-1)^{T_r f} omega^{rs} T_r(f) T_s(g)``."""
    check_same_dims(ctx.dims, f.dims)
    check_same_dims(ctx.dims, g.dims)
    result = f * g.partial_even(Z) - f.partial_even(Z) * g
    for parity, part in enumerate(f.parity_parts()):
        if not part:
            continue
        for r in ctx.indices:
            derivative = ctx.t(r).apply(part)
            if not derivative:
                continue
            s = ctx.partner(r)
            coeff = -HALF * ctx.upper(r, s)
            if parity and ctx.parity(r):
                coeff = -coeff
            result = result + (derivative * ctx.t(s).apply(g)).scale(coeff)
    return result


def frame_decomposition(
    ctx: ContactContext, field: SuperVectorField
) -> Tuple[Superfunction, Tuple[Superfunction, ...]]:
    """Split ``X = h d/dz + sum_r g_r T_r``; returns ``(h, (g_1, ..., g_N))``."""
    check_same_dims(ctx.dims, field.dims)
    return (
        form_eval(ctx.alpha, field),
        tuple(field.coefficient(ctx.dims.generalized(r)) for r in ctx.indices),
    )


def frame_recompose(
    ctx: ContactContext, h: Superfunction, coeffs: Sequence[Superfunction]
) -> SuperVectorField:
    result = h * ctx.reeb
    for element, coeff in zip(ctx.frame, coeffs):
        result = result + coeff * element
    return result


def quadratic_dim(dims: Dims) -> int:
    m, n = dims.even_count, dims.n
    return 1 + (m + n) + m * (m + 1) // 2 + m * n + n * (n - 1) // 2


@lru_cache(maxsize=None)
def quadratic_basis(dims: Dims) -> Tuple[Superfunction, ...]:
    """Monomials of total degree <= 2, in canonical order."""
    coords = [Superfunction.coordinate(dims, coord) for coord in dims.coords]
    basis = [Superfunction.constant(dims, 1), *coords]
    for i, left in enumerate(dims.coords):
        for j in range(i, len(coords)):
            if i == j and left.parity:
                continue
            basis.append(coords[i] * coords[j])

    basis.sort(key=lambda f: canonical_key(next(iter(f.terms)), dims.n))
    return tuple(basis)


def quadratic_coordinates(f: Superfunction) -> Tuple[Fraction, ...]:
    """Coefficient vector of ``f`` in ``quadratic_basis(f.dims)``."""
    index = _quadratic_index(f.dims)
    vector = [Fraction(0)] * len(index)
    for monomial, coeff in f.terms.items():
        if monomial not in index:
            raise ContactError(f'{f} has degree {f.degree()} > 2')
        vector[index[monomial]] = coeff
    return tuple(vector)


def structure_constants(ctx: ContactContext) -> StructureConstants:
    """Sparse table ``{(a, b): {k: c}}`` with ``{e_a, e_b} = sum_k c e_k``."""
    basis = quadratic_basis(ctx.dims)
    table = {}
    for a, left in enumerate(basis):
        for b, right in enumerate(basis):
            vector = quadratic_coordinates(lagrange_bracket(ctx, left, right))
            entries = {k: c for k, c in enumerate(vector) if c}
            if entries:
                table[a, b] = entries
    return table


@lru_cache(maxsize=None)
def _quadratic_index(dims: Dims):
    return {next(iter(f.terms)): k for k, f in enumerate(quadratic_basis(dims))}
