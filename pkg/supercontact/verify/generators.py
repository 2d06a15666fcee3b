from fractions import Fraction
from random import Random
from typing import Optional

from ..fields.vector_fields import SuperVectorField
from ..grassmann.dims import Dims
from ..grassmann.superfunction import Monomial, Superfunction
from ..spo.basis import spo_basis
from ..spo.matrix import GradedMatrix, index_parity, matrix_size


def make_rng(seed: int, name: str) -> Random:
    """Independent stream per check, stable across runs and check order."""
    return Random(f'{seed}:{name}')


def random_fraction(rng: Random, max_abs: int = 5, max_den: int = 3) -> Fraction:
    value = Fraction(0)
    while not value:
        value = Fraction(rng.randint(-max_abs, max_abs), rng.randint(1, max_den))
    return value


def random_monomial(
    rng: Random, dims: Dims, max_degree: int = 2, parity: Optional[int] = None
) -> Monomial:
    odd_counts = [
        p
        for p in range(min(dims.n, max_degree) + 1)
        if parity is None or p % 2 == parity
    ]
    odd_count = rng.choice(odd_counts)
    evens = [0] * dims.even_count
    for _ in range(rng.randint(0, max_degree - odd_count)):
        evens[rng.randrange(dims.even_count)] += 1
    odds = tuple(sorted(rng.sample(range(1, dims.n + 1), odd_count)))
    return Monomial(tuple(evens), odds)


def random_superfunction(
    rng: Random,
    dims: Dims,
    max_degree: int = 2,
    parity: Optional[int] = None,
    max_terms: int = 4,
) -> Superfunction:
    terms = {
        random_monomial(rng, dims, max_degree, parity): random_fraction(rng)
        for _ in range(rng.randint(1, max_terms))
    }
    return Superfunction(dims, terms)


def random_field(
    rng: Random,
    dims: Dims,
    parity: int,
    max_degree: int = 2,
    max_terms: int = 3,
) -> SuperVectorField:
    """Random homogeneous field of the given parity."""
    coeffs = {}
    for coord in rng.sample(dims.coords, rng.randint(1, len(dims.coords))):
        coeffs[coord] = random_superfunction(
            rng,
            dims,
            max_degree=max_degree,
            parity=(parity + coord.parity) % 2,
            max_terms=max_terms,
        )
    return SuperVectorField(dims, coeffs)


def random_graded_matrix(
    rng: Random, dims: Dims, parity: Optional[int] = None, density: float = 0.3
) -> GradedMatrix:
    size = matrix_size(dims)
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            block_parity = (index_parity(dims, i) + index_parity(dims, j)) % 2
            if parity is not None and block_parity != parity:
                continue
            if rng.random() < density:
                rows[i][j] = random_fraction(rng)
    return GradedMatrix(dims, rows)


def random_spo_matrix(
    rng: Random, dims: Dims, parity: Optional[int] = None
) -> GradedMatrix:
    """Random rational combination of spo basis elements."""
    result = GradedMatrix.zero(dims)
    for _, element in spo_basis(dims):
        if parity is not None and element.parity != parity:
            continue
        if rng.random() < 0.5:
            result = result + element * random_fraction(rng)
    return result
