import pytest
from pydantic import parse_obj_as

from oblivagg.data_models.api import AnyUserKey
from tests.oblivagg.data_models.specs.api import Spec


def test_user_key_should_be_deserializable(key_spec: Spec):
    obj = key_spec.obj()
    if key_spec.cls.__name__ == "SourceKey":
        pytest.skip("the source key is not a user key")
    deserialized = parse_obj_as(AnyUserKey, obj.dict())
    assert type(deserialized) == type(obj)
    assert obj == deserialized


def test_invalid_spec_should_not_validate(invalid_spec: Spec):
    with pytest.raises(ValueError):
        invalid_spec.obj()
