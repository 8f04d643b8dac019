from typing import List

from pydantic import conint, validator

from oblivagg.data_models.base import FrozenModel
from oblivagg.data_models.enum import SchemeEnum
from oblivagg.data_models.field import FieldSpec


class SessionParams(FrozenModel):
    """Parameters governing every operation of an aggregation session.

    Attributes:
        n_users (int): number of users K, at least 2.
        spec (FieldSpec): the field F_q. An integer is accepted and wrapped.
        length (int): input length L, at least 1.
        scheme (SchemeEnum): key/message design.
        broadcast_reply (bool): send one reply frame to all survivors instead of one per user.
            Changes the fan-out only, never the payload.
    """

    n_users: conint(ge=2)  # type: ignore
    spec: FieldSpec
    length: conint(ge=1)  # type: ignore
    scheme: SchemeEnum = SchemeEnum.NO_DROPOUT
    broadcast_reply: bool = False

    @validator("spec", pre=True)
    def validate_spec(cls, spec):
        if isinstance(spec, int):
            return FieldSpec(q=spec)
        return spec

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def users(self) -> List[int]:
        """User ids 1..K."""
        return list(range(1, self.n_users + 1))

    @property
    def n_states(self) -> int:
        """Size q^(2KL) of the joint input/noise space."""
        return self.spec.q ** (2 * self.n_users * self.length)
