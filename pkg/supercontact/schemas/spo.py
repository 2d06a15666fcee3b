from marshmallow import Schema, fields
from marshmallow_enum import EnumField

from .fields import RationalField
from ..spo import SpoFamily


class GradedMatrixSchema(Schema):
    l = fields.Int(required=True, attribute='dims.l')  # noqa: E741
    n = fields.Int(required=True, attribute='dims.n')
    entries = fields.List(fields.List(RationalField()), required=True)


class BasisElementSchema(Schema):
    family = EnumField(
        SpoFamily, by_value=True, required=True, attribute='label.family'
    )
    i = fields.Int(required=True, attribute='label.i')
    j = fields.Int(required=True, attribute='label.j')
    matrix = fields.Nested(GradedMatrixSchema, required=True)
