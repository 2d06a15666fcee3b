from enum import Enum, unique


@unique
class CoordKind(Enum):
    Z = 'z'
    X = 'x'
    Y = 'y'
    THETA = 'th'


class GrassmannError(Exception):
    pass


class InvalidDimsError(GrassmannError):
    pass


class DimensionMismatchError(GrassmannError):
    def __init__(self, left, right):
        super().__init__(f'Dimension mismatch: {left} vs {right}')


class UnknownCoordinateError(GrassmannError):
    pass


class ExpressionSyntaxError(GrassmannError):
    def __init__(self, message: str, position: int = None):
        if position is not None:
            message = f'{message} (at position {position})'
        super().__init__(message)
        self.position = position
