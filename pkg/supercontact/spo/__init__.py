from enum import Enum, unique


@unique
class SpoFamily(Enum):
    SP1 = 'Sp1'
    SP2 = 'Sp2'
    SP3 = 'Sp3'
    ODD_A = 'OddA'
    ODD_B = 'OddB'
    O = 'O'  # noqa: E741


class SpoError(Exception):
    pass


class MatrixShapeError(SpoError):
    pass


class InvalidBasisLabelError(SpoError):
    pass
