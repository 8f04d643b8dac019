import pytest

from oblivagg.data_models.api import AnyThing
from oblivagg.data_models.base import BaseModel


@pytest.mark.parametrize("model", AnyThing)
def test_data_models_should_generate_schema(model: BaseModel):
    model.schema()
