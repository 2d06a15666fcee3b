"""Closed-form Hamiltonians of the embedded spo basis, case by case."""
from ..grassmann.dims import Dims
from ..grassmann.expressions import parse_expr
from ..grassmann.superfunction import Superfunction
from ..spo import SpoFamily
from ..spo.basis import SpoBasisLabel


def expected_hamiltonian_text(dims: Dims, label: SpoBasisLabel) -> str:
    label.validate(dims)
    i, j = label.i, label.j
    a, b = i - 1, j - 1

    if label.family is SpoFamily.SP1:
        if i == 1 and j == 1:
            return '2*z'
        if j == 1:
            return f'2*y{a}'
        if i == 1:
            return f'2*x{b}*z'
        return f'2*x{b}*y{a}'

    if label.family is SpoFamily.SP2:
        if i == 1:
            return 'z^2' if j == 1 else f'2*y{b}*z'
        return f'y{a}^2' if i == j else f'2*y{a}*y{b}'

    if label.family is SpoFamily.SP3:
        if i == 1:
            return '-1' if j == 1 else f'-2*x{b}'
        return f'-x{a}^2' if i == j else f'-2*x{a}*x{b}'

    if label.family is SpoFamily.ODD_A:
        shift = i - dims.l - 2
        return f'2*th{j}' if shift == 0 else f'2*x{shift}*th{j}'

    if label.family is SpoFamily.ODD_B:
        return f'-2*z*th{j}' if i == 1 else f'-2*y{a}*th{j}'

    return f'2*th{i}*th{j}'


def expected_hamiltonian(dims: Dims, label: SpoBasisLabel) -> Superfunction:
    return parse_expr(expected_hamiltonian_text(dims, label), dims)
