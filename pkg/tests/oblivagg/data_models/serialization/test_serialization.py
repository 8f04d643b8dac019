import json

from tests.oblivagg.data_models.specs.api import Spec


def test_data_model_should_be_serializable(valid_spec: Spec):
    spec = valid_spec.typed_spec()
    obj = valid_spec.cls(**spec)
    assert obj.dict() == spec


def test_data_model_should_survive_json(valid_spec: Spec):
    obj = valid_spec.obj()
    assert valid_spec.cls.parse_raw(obj.json()) == obj
    json.loads(obj.json())
