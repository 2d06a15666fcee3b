from marshmallow import Schema, fields
from marshmallow_enum import EnumField

from .fields import RationalField
from ..spo import SpoFamily


class CorrespondenceRowSchema(Schema):
    family = EnumField(
        SpoFamily, by_value=True, required=True, attribute='label.family'
    )
    i = fields.Int(required=True, attribute='label.i')
    j = fields.Int(required=True, attribute='label.j')
    field = fields.Str(required=True)
    hamiltonian = fields.Str(required=True)


class StructureConstantSchema(Schema):
    class TermSchema(Schema):
        monomial = fields.Str(required=True)
        coefficient = RationalField(required=True)

    left = fields.Str(required=True)
    right = fields.Str(required=True)
    terms = fields.List(fields.Nested(TermSchema), required=True)
