from typing import Dict, List, Optional, Tuple

from pydantic import validator

from oblivagg.data_models.base import BaseModel, FrozenModel
from oblivagg.data_models.field import FieldVector
from oblivagg.data_models.keys import SourceKey
from oblivagg.data_models.messages import SurvivorSet


class DropPlan(FrozenModel):
    """Users dropping out of a session, at one of two points.

    Attributes:
        before_send (Tuple[int, ...]): users that never send X_k; they are not in U.
        after_send (Tuple[int, ...]): users whose X_k reaches the server (so they are in U)
            but who leave before the reply and decode nothing.
    """

    before_send: Tuple[int, ...] = ()
    after_send: Tuple[int, ...] = ()

    @validator("before_send", "after_send")
    def validate_ids(cls, ids):
        if any(i < 1 for i in ids):
            raise ValueError(f"user ids start at 1, got {ids}")
        return tuple(sorted(set(ids)))

    @validator("after_send")
    def validate_disjoint(cls, after_send, values):
        overlap = set(after_send) & set(values.get("before_send", ()))
        if overlap:
            raise ValueError(f"users {sorted(overlap)} cannot drop twice")
        return after_send

    @property
    def dropped(self) -> Tuple[int, ...]:
        return tuple(sorted(self.before_send + self.after_send))

    def is_empty(self) -> bool:
        return len(self.before_send) == 0 and len(self.after_send) == 0


class SessionOutcome(BaseModel):
    """Result of a simulated session.

    Attributes:
        survivors (SurvivorSet): realized U.
        decoded (Dict[int, FieldVector]): decoded sum per user that received a reply.
        errors (Dict[int, str]): decoding error per user that failed.
        drop_plan (DropPlan): the drops that were injected.
        reply_frames (int): number of downlink frames the server emitted.
        seed (Optional[int]): seed of the key generator, if any.
        source_key (Optional[SourceKey]): the dealer's source key the session ran with.
    """

    survivors: SurvivorSet
    decoded: Dict[int, FieldVector]
    errors: Dict[int, str] = {}
    drop_plan: DropPlan = DropPlan()
    reply_frames: int
    seed: Optional[int] = None
    source_key: Optional[SourceKey] = None

    @property
    def recipients(self) -> List[int]:
        return [k for k in self.survivors.members if k not in self.drop_plan.after_send]
