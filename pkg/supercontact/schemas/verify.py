from marshmallow import Schema, fields, validate


class CheckResultSchema(Schema):
    name = fields.Str(required=True)
    passed = fields.Bool(required=True)
    details = fields.Str(required=True)
    elapsed_ms = fields.Int(
        required=True,
        data_key='elapsedMs',
        validate=validate.Range(min=0),
    )


class ReportSchema(Schema):
    l = fields.Int(required=True)  # noqa: E741
    n = fields.Int(required=True)
    dim_spo = fields.Int(required=True, data_key='dimSpo')
    dim_quadratic = fields.Int(required=True, data_key='dimQuadratic')
    checks = fields.List(fields.Nested(CheckResultSchema), required=True)
    all_passed = fields.Bool(required=True, data_key='allPassed')
