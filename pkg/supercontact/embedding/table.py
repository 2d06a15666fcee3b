from dataclasses import dataclass
from typing import List

from .projective import embed_spo
from ..contact.context import ContactContext
from ..contact.hamiltonian import hamiltonian_of
from ..fields import check_same_dims
from ..fields.vector_fields import SuperVectorField
from ..grassmann.dims import Dims
from ..grassmann.superfunction import Superfunction
from ..spo.basis import SpoBasisLabel, spo_basis


@dataclass(frozen=True)
class CorrespondenceRow:
    label: SpoBasisLabel
    field: SuperVectorField
    hamiltonian: Superfunction


def correspondence_table(
    ctx: ContactContext, dims: Dims = None
) -> List[CorrespondenceRow]:
    """Embedded field and recovered Hamiltonian for every spo basis element."""
    dims = dims or ctx.dims
    check_same_dims(ctx.dims, dims)
    rows = []
    for label, matrix in spo_basis(dims):
        field = embed_spo(ctx, matrix)
        rows.append(CorrespondenceRow(label, field, hamiltonian_of(ctx, field)))
    return rows
