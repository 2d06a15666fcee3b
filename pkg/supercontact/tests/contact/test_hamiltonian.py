from fractions import Fraction

import pytest
from hypothesis import given

from supercontact.contact import ContactError, NotContactError
from supercontact.contact.context import make_context
from supercontact.contact.hamiltonian import (
    contact_field,
    first_contact_failure,
    frame_decomposition,
    frame_recompose,
    hamiltonian_of,
    is_contact,
    is_tangent,
    lagrange_bracket,
    quadratic_basis,
    quadratic_coordinates,
    quadratic_dim,
    structure_constants,
)
from supercontact.fields.forms import form_eval
from supercontact.grassmann.dims import Dims
from supercontact.grassmann.expressions import format_expr
from supercontact.tests.factories import field, sf
from supercontact.tests.strategies import (
    homogeneous_superfunctions,
    superfunctions,
    vector_fields,
)


DIMS = Dims(1, 2)
CTX = make_context(DIMS)


def _sign(parity: int) -> int:
    return -1 if parity else 1


@pytest.mark.parametrize(
    'src,expected',
    [
        ('1', {'z': '1'}),
        ('th1', {'z': '1/2*th1', 'th1': '1/2'}),
        (
            'z',
            {
                'z': 'z',
                'x1': '1/2*x1',
                'y1': '1/2*y1',
                'th1': '1/2*th1',
                'th2': '1/2*th2',
            },
        ),
        ('x1', {'z': '1/2*x1', 'y1': '1/2'}),
        ('y1', {'z': '1/2*y1', 'x1': '-1/2'}),
        ('th1*th2', {'th1': '-1/2*th2', 'th2': '1/2*th1'}),
    ],
)
def test_contact_field(src, expected):
    assert contact_field(CTX, sf(DIMS, src)) == field(DIMS, expected)


def test_contact_field_text():
    assert str(contact_field(CTX, sf(DIMS, 'th1'))) == (
        '(1/2*th1)*d/dz + (1/2)*d/dth1'
    )


@pytest.mark.parametrize(
    'coeffs,expected',
    [
        ({'z': '1'}, '1'),
        ({'z': 'th1', 'th1': '1'}, '2*th1'),
        (
            {
                'z': 'z',
                'x1': '1/2*x1',
                'y1': '1/2*y1',
                'th1': '1/2*th1',
                'th2': '1/2*th2',
            },
            'z',
        ),
    ],
)
def test_hamiltonian_of(coeffs, expected):
    assert hamiltonian_of(CTX, field(DIMS, coeffs)) == sf(DIMS, expected)


def test_hamiltonian_of_non_contact_field():
    with pytest.raises(NotContactError) as exc_info:
        hamiltonian_of(CTX, CTX.t(1))
    assert exc_info.value.frame_index == 2
    assert exc_info.value.bracket == field(DIMS, {'z': '-2'})


def test_tangent_and_contact():
    assert not is_tangent(CTX, CTX.reeb)
    assert is_contact(CTX, CTX.reeb)
    assert all(is_tangent(CTX, t) for t in CTX.frame)
    assert not is_contact(CTX, CTX.t(1))
    assert first_contact_failure(CTX, CTX.reeb) is None
    combination = sf(DIMS, 'z*th1') * CTX.t(1) + sf(DIMS, 'x1^2') * CTX.t(2)
    assert is_tangent(CTX, combination)


@pytest.mark.parametrize(
    'f,g,expected',
    [
        ('1', 'z', '1'),
        ('z', '1', '-1'),
        ('th1', 'th1', '1/2'),
        ('x1', 'y1', '1/2'),
        ('th1', 'th2', '0'),
        ('z', 'x1', '-1/2*x1'),
        ('x1^2', 'y1', 'x1'),
    ],
)
def test_lagrange_bracket(f, g, expected):
    assert lagrange_bracket(CTX, sf(DIMS, f), sf(DIMS, g)) == sf(DIMS, expected)


@given(superfunctions(DIMS))
def test_contact_field_round_trip(f):
    x = contact_field(CTX, f)
    assert is_contact(CTX, x)
    assert hamiltonian_of(CTX, x) == f
    assert contact_field(CTX, hamiltonian_of(CTX, x)) == x


@given(homogeneous_superfunctions(DIMS), homogeneous_superfunctions(DIMS))
def test_lagrange_homomorphism(f, g):
    bracket = contact_field(CTX, f).bracket(contact_field(CTX, g))
    assert bracket == contact_field(CTX, lagrange_bracket(CTX, f, g))


@given(homogeneous_superfunctions(DIMS), homogeneous_superfunctions(DIMS))
def test_lagrange_antisymmetry(f, g):
    expected = -lagrange_bracket(CTX, g, f).scale(_sign(f.parity * g.parity))
    assert lagrange_bracket(CTX, f, g) == expected


@given(superfunctions(DIMS), superfunctions(DIMS))
def test_quadratic_closure(f, g):
    assert lagrange_bracket(CTX, f, g).degree() <= 2


@given(vector_fields(DIMS, parity=0) | vector_fields(DIMS, parity=1))
def test_frame_decomposition(x):
    h, coeffs = frame_decomposition(CTX, x)
    assert h == form_eval(CTX.alpha, x)
    assert len(coeffs) == DIMS.generalized_count
    assert frame_recompose(CTX, h, coeffs) == x


@given(vector_fields(DIMS, parity=0) | vector_fields(DIMS, parity=1))
def test_contact_condition(x):
    h, coeffs = frame_decomposition(CTX, x)
    for j in CTX.indices:
        expected = -CTX.t(j)(h).scale(_sign(x.parity * CTX.parity(j)))
        for i, g in zip(CTX.indices, coeffs):
            expected = expected - g.scale(2 * CTX.lower(i, j))
        assert form_eval(CTX.alpha, x.bracket(CTX.t(j))) == expected


@pytest.mark.parametrize(
    'dims,count',
    [(Dims(0, 1), 5), (Dims(1, 1), 14), (Dims(1, 2), 19), (Dims(2, 3), 42)],
    ids=str,
)
def test_quadratic_dim(dims, count):
    assert quadratic_dim(dims) == count
    assert len(quadratic_basis(dims)) == count
    assert len(set(quadratic_basis(dims))) == count


def test_quadratic_basis_order():
    assert [format_expr(f) for f in quadratic_basis(Dims(0, 1))] == [
        '1',
        'z',
        'th1',
        'z^2',
        'z*th1',
    ]


def test_quadratic_coordinates():
    dims = Dims(0, 1)
    assert quadratic_coordinates(sf(dims, '3 - 1/2*z*th1')) == (
        3,
        0,
        0,
        0,
        Fraction(-1, 2),
    )
    with pytest.raises(ContactError):
        quadratic_coordinates(sf(dims, 'z^3'))


def test_structure_constants():
    table = structure_constants(make_context(Dims(0, 1)))
    assert table[0, 1] == {0: 1}
    assert table[1, 0] == {0: -1}
    assert table[2, 2] == {0: Fraction(1, 2)}
    assert (0, 0) not in table
    assert (1, 1) not in table
