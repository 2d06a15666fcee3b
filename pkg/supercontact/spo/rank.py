from fractions import Fraction
from typing import Sequence

import sympy

from .matrix import to_rational


def rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank of the row vectors; an empty family has rank 0."""
    if not vectors:
        return 0
    return sympy.Matrix(
        [[to_rational(Fraction(value)) for value in vector] for vector in vectors]
    ).rank()
