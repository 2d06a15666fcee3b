import re
from fractions import Fraction

from marshmallow import ValidationError, fields


_RATIONAL = re.compile(r'-?\d+(?:/\d+)?')


class RationalField(fields.Field):
    """Exact rational as a ``"p/q"`` string; integers keep the ``/1``."""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        value = Fraction(value)
        return f'{value.numerator}/{value.denominator}'

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, str) or not _RATIONAL.fullmatch(value):
            raise ValidationError(f'Expected a "p/q" rational string, got {value!r}.')
        try:
            return Fraction(value)
        except ZeroDivisionError as exc:
            raise ValidationError(f'Zero denominator in {value!r}.') from exc
