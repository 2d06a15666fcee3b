import pytest

from supercontact.grassmann import DimensionMismatchError
from supercontact.grassmann.dims import Dims
from supercontact.spo import MatrixShapeError
from supercontact.spo.matrix import GradedMatrix, matrix_size
from supercontact.spo.omega import (
    OmegaStructure,
    is_spo_blocks,
    omega_form,
    preserves_omega,
)
from supercontact.tests.factories import dims_grid
from supercontact.verify.generators import (
    make_rng,
    random_graded_matrix,
    random_spo_matrix,
)


DIMS = Dims(1, 2)
OMEGA = OmegaStructure(DIMS)


def basis_vector(k):
    vector = [0] * matrix_size(DIMS)
    vector[k - 1] = 1
    return vector


def unit(i, j, value=1):
    return GradedMatrix.unit(DIMS, i, j, value)


@pytest.mark.parametrize(
    'u,v,expected',
    [(1, 3, 1), (3, 1, -1), (1, 1, 0), (5, 5, 1), (5, 6, 0), (2, 4, 1)],
)
def test_omega_form(u, v, expected):
    assert omega_form(OMEGA, basis_vector(u), basis_vector(v)) == expected


def test_omega_form_shape():
    with pytest.raises(MatrixShapeError):
        omega_form(OMEGA, [1, 0], [0, 1])


def test_gram_matrix():
    j_part = unit(1, 3, -1) + unit(2, 4, -1) + unit(3, 1) + unit(4, 2)
    assert OMEGA.g == j_part + unit(5, 5) + unit(6, 6)
    j = OMEGA.j
    assert j.shape == (4, 4)
    assert j[2, 0] == 1 and j[0, 2] == -1


@pytest.mark.parametrize(
    'matrix,expected',
    [
        (GradedMatrix.identity(DIMS), False),
        (unit(1, 1) - unit(3, 3), True),
        (unit(1, 3), True),
        (unit(5, 6) - unit(6, 5), True),
        (unit(5, 6), False),
        (unit(1, 5), False),
        (unit(3, 5) - unit(5, 1), True),
        (unit(1, 5) + unit(5, 3), True),
        (unit(1, 5) - unit(5, 3), False),
        (GradedMatrix.zero(DIMS), True),
    ],
)
def test_membership(matrix, expected):
    assert preserves_omega(OMEGA, matrix) is expected
    assert is_spo_blocks(matrix) is expected


@pytest.mark.parametrize('dims', dims_grid(2, 3, slow_size=6))
def test_criteria_agree_on_random_matrices(dims):
    omega = OmegaStructure(dims)
    rng = make_rng(0, f'test_criteria_agree_on_random_matrices{dims}')
    for k in range(200):
        matrix = random_spo_matrix(rng, dims)
        if k % 2:
            matrix = matrix + random_graded_matrix(rng, dims, density=0.1)
        assert preserves_omega(omega, matrix) == is_spo_blocks(matrix)
        if not k % 2:
            assert is_spo_blocks(matrix)


def test_dims_mismatch():
    with pytest.raises(DimensionMismatchError):
        preserves_omega(OMEGA, GradedMatrix.identity(Dims(1, 1)))
