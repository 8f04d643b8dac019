import logging
from typing import Dict, Optional

import numpy as np

import oblivagg.schemes.api as schemes
from oblivagg.data_models.enum import ServerPhaseEnum
from oblivagg.data_models.field import FieldVector
from oblivagg.data_models.messages import PhaseOneMsg, PhaseTwoMsg, SurvivorSet
from oblivagg.data_models.session import SessionParams
from oblivagg.errors import (
    DroppedUserUnderNoDropoutScheme,
    DuplicateMessageError,
    EmptySurvivorSetError,
    PhaseError,
    ProtocolError,
    UnknownUserError,
)
from oblivagg.protocol.user import check_vector

logger = logging.getLogger(__name__)


class ServerState:
    """The oblivious server: collects phase-one messages, then replies with their sum.

    Attributes:
        params (SessionParams): session parameters.
        received (Dict[int, PhaseOneMsg]): at most one message per user.
        phase (ServerPhaseEnum): Collecting or Closed.
        survivors (SurvivorSet, optional): U, fixed when collection closes.
    """

    def __init__(self, params: SessionParams):
        self.params = params
        self.scheme = schemes.map(params)
        self.received: Dict[int, PhaseOneMsg] = {}
        self.phase = ServerPhaseEnum.COLLECTING
        self.survivors: Optional[SurvivorSet] = None

    def receive(self, msg: PhaseOneMsg) -> None:
        """Single ingestion point of phase-one messages.

        Raises:
            PhaseError: if collection is closed.
            UnknownUserError: if the sender is not in [1, K].
            DuplicateMessageError: if the sender already delivered a message.
        """
        if self.phase != ServerPhaseEnum.COLLECTING:
            raise PhaseError(f"server is {self.phase.value}, cannot receive from user {msg.user_id}")
        if msg.user_id > self.params.n_users:
            raise UnknownUserError(f"user {msg.user_id} is not in [1, {self.params.n_users}]")
        if msg.user_id in self.received:
            raise DuplicateMessageError(f"user {msg.user_id} already sent a phase-one message")
        check_vector(msg.payload, self.params, f"message of user {msg.user_id}")
        self.received[msg.user_id] = msg

    def close(self) -> SurvivorSet:
        """Closes collection and fixes U to the ids received so far.

        Raises:
            PhaseError: if collection is already closed.
            EmptySurvivorSetError: if nothing was received.
            DroppedUserUnderNoDropoutScheme: if a NoDropout session misses users.
            ProtocolError: if the scheme has no reply phase.
        """
        if self.phase != ServerPhaseEnum.COLLECTING:
            raise PhaseError("server collection is already closed")
        if len(self.received) == 0:
            raise EmptySurvivorSetError("no phase-one message was received")
        if not self.scheme.has_reply:
            raise ProtocolError(f"scheme {self.params.scheme.value} has no reply phase")
        survivors = SurvivorSet(members=tuple(self.received))
        if not self.scheme.tolerates_dropouts and not survivors.is_complete(
            self.params.n_users
        ):
            missing = [k for k in self.params.users if k not in survivors]
            raise DroppedUserUnderNoDropoutScheme(
                f"users {missing} dropped, the {self.params.scheme.value} keys only "
                "decode the sum over all users"
            )
        self.survivors = survivors
        self.phase = ServerPhaseEnum.CLOSED
        logger.info("server closed collection with U=%s", survivors)
        return survivors

    def reply(self) -> PhaseTwoMsg:
        """The reply (U, sum of the survivors' X), identical for every survivor."""
        if self.phase != ServerPhaseEnum.CLOSED or self.survivors is None:
            raise PhaseError("server has to close collection before replying")
        x = np.zeros((self.params.n_users, self.params.length), dtype=np.uint64)
        for user_id, msg in self.received.items():
            x[user_id - 1] = msg.payload.to_numpy()
        y = self.scheme.reply(x, self.survivors.members)
        return PhaseTwoMsg(
            survivors=self.survivors, payload=FieldVector.from_numpy(self.params.spec, y)
        )

    def close_and_reply(self) -> Dict[int, PhaseTwoMsg]:
        survivors = self.close()
        msg = self.reply()
        return {k: msg for k in survivors.members}


def server_close_and_reply(st: ServerState) -> Dict[int, PhaseTwoMsg]:
    """Closes collection and addresses the reply to every survivor."""
    return st.close_and_reply()
