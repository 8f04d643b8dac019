from typing import Tuple

from pydantic import conint, validator

from oblivagg.data_models.base import FrozenModel
from oblivagg.data_models.enum import FrameTypeEnum
from oblivagg.data_models.field import FieldVector


class PhaseOneMsg(FrozenModel):
    """Uplink message X_k = W_k + N_k of user k.

    Attributes:
        user_id (int): sender k.
        payload (FieldVector): the masked input, L symbols.
    """

    user_id: conint(ge=1)  # type: ignore
    payload: FieldVector


class SurvivorSet(FrozenModel):
    """Nonempty set U of users whose phase-one messages reached the server.

    Members are stored sorted; duplicates are rejected.

    Attributes:
        members (Tuple[int, ...]): ids of the surviving users.
    """

    members: Tuple[int, ...]

    @validator("members")
    def validate_members(cls, members):
        if len(members) == 0:
            raise ValueError("survivor set must not be empty")
        if len(set(members)) != len(members):
            raise ValueError(f"duplicate user ids in survivor set {members}")
        if min(members) < 1:
            raise ValueError(f"user ids start at 1, got {members}")
        return tuple(sorted(members))

    def __contains__(self, user_id: object) -> bool:
        return user_id in self.members

    def __len__(self) -> int:
        return len(self.members)

    def is_complete(self, n_users: int) -> bool:
        """True if U = [K]."""
        return self.members == tuple(range(1, n_users + 1))

    def fits(self, n_users: int) -> bool:
        return max(self.members) <= n_users

    def __str__(self) -> str:
        return "{" + ",".join(str(m) for m in self.members) + "}"


class PhaseTwoMsg(FrozenModel):
    """Downlink message: the survivor set and Y = sum of the survivors' X.

    Attributes:
        survivors (SurvivorSet): the realized survivor set U.
        payload (FieldVector): the masked sum, L symbols.
    """

    survivors: SurvivorSet
    payload: FieldVector


class Frame(FrozenModel):
    """Length-prefixed frame on the wire.

    Attributes:
        frame_type (FrameTypeEnum): kind of payload.
        payload (bytes): encoded message.
    """

    frame_type: FrameTypeEnum
    payload: bytes

    @property
    def length(self) -> int:
        return len(self.payload)
