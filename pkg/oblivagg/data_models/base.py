from fractions import Fraction

from pydantic import BaseModel as PydanticBaseModel
from pydantic import Extra


class BaseModel(PydanticBaseModel):
    class Config:
        validate_assignment = True
        arbitrary_types_allowed = False
        copy_on_model_validation = "none"
        extra = Extra.forbid

        json_encoders = {
            bytes: lambda x: x.hex(),
            Fraction: lambda x: str(x),
        }


class FrozenModel(BaseModel):
    """Base class for immutable values, safe to share between threads."""

    class Config:
        frozen = True
