from supercontact.grassmann.dims import Dims
from supercontact.spo.omega import is_spo_blocks
from supercontact.verify.generators import (
    make_rng,
    random_field,
    random_fraction,
    random_graded_matrix,
    random_spo_matrix,
    random_superfunction,
)


DIMS = Dims(1, 2)


def test_streams_are_reproducible_and_independent():
    first = [make_rng(3, 'check').random() for _ in range(2)]
    assert first[0] == first[1]
    assert make_rng(3, 'check').random() != make_rng(3, 'other').random()
    assert make_rng(3, 'check').random() != make_rng(4, 'check').random()


def test_random_fraction_is_nonzero():
    rng = make_rng(0, 'fractions')
    assert all(random_fraction(rng) for _ in range(200))


def test_random_superfunction():
    rng = make_rng(0, 'superfunctions')
    for parity in (0, 1):
        for _ in range(50):
            f = random_superfunction(rng, DIMS, max_degree=3, parity=parity)
            assert f.degree() <= 3
            assert f.parity == parity


def test_random_field_parity():
    rng = make_rng(0, 'fields')
    for parity in (0, 1):
        for _ in range(50):
            assert random_field(rng, DIMS, parity).parity == parity


def test_random_matrices():
    rng = make_rng(0, 'matrices')
    for parity in (0, 1):
        matrix = random_graded_matrix(rng, DIMS, parity)
        assert not matrix.parity_parts()[1 - parity]
        assert is_spo_blocks(random_spo_matrix(rng, DIMS, parity))
