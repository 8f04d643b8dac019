import logging
from typing import Optional

import oblivagg.schemes.api as schemes
from oblivagg.data_models.enum import UserPhaseEnum
from oblivagg.data_models.field import FieldVector
from oblivagg.data_models.keys import AnyUserKey
from oblivagg.data_models.messages import PhaseOneMsg, PhaseTwoMsg
from oblivagg.data_models.session import SessionParams
from oblivagg.errors import (
    FieldSpecMismatchError,
    KeyMismatchError,
    LengthMismatchError,
    NotASurvivorError,
    PhaseError,
    UnknownUserError,
)

logger = logging.getLogger(__name__)


def check_vector(v: FieldVector, params: SessionParams, what: str) -> None:
    if v.spec != params.spec:
        raise FieldSpecMismatchError(f"{what} lives over F_{v.spec.q}, session over F_{params.q}")
    if len(v) != params.length:
        raise LengthMismatchError(f"{what} has length {len(v)}, expected {params.length}")


class UserState:
    """State machine of a single user: Fresh -> Sent -> Decoded.

    Attributes:
        params (SessionParams): session parameters.
        user_id (int): id k of the user.
        inputs (FieldVector): the private input W_k.
        key (AnyUserKey): the key Z_k handed out by the dealer.
        phase (UserPhaseEnum): current phase.
        result (FieldVector, optional): the decoded sum once the phase is Decoded.
    """

    def __init__(
        self,
        params: SessionParams,
        user_id: int,
        inputs: FieldVector,
        key: AnyUserKey,
    ):
        if user_id < 1 or user_id > params.n_users:
            raise UnknownUserError(f"user {user_id} is not in [1, {params.n_users}]")
        check_vector(inputs, params, f"input of user {user_id}")
        self.scheme = schemes.map(params)
        if key.scheme != params.scheme:
            raise KeyMismatchError(
                f"key of scheme {key.scheme.value} used in a {params.scheme.value} session"
            )
        if key.user_id != user_id:
            raise KeyMismatchError(f"key of user {key.user_id} handed to user {user_id}")
        if key.spec != params.spec:
            raise KeyMismatchError(f"key lives over F_{key.spec.q}, session over F_{params.q}")
        if len(key.symbols()) != self.scheme.user_key_length:
            raise KeyMismatchError(
                f"key holds {len(key.symbols())} symbols, "
                f"expected {self.scheme.user_key_length}"
            )
        self.params = params
        self.user_id = user_id
        self.inputs = inputs
        self.key = key
        self.phase = UserPhaseEnum.FRESH
        self.result: Optional[FieldVector] = None

    def _expect(self, phase: UserPhaseEnum) -> None:
        if self.phase != phase:
            raise PhaseError(
                f"user {self.user_id} is in phase {self.phase.value}, expected {phase.value}"
            )

    def phase_one(self) -> PhaseOneMsg:
        """Masks the input with the own noise, X_k = W_k + N_k.

        Raises:
            PhaseError: if the user already sent.

        Returns:
            PhaseOneMsg: the uplink message.
        """
        self._expect(UserPhaseEnum.FRESH)
        x = self.scheme.phase_one(self.inputs.to_numpy(), self.key.symbols(), self.user_id)
        self.phase = UserPhaseEnum.SENT
        return PhaseOneMsg(
            user_id=self.user_id, payload=FieldVector.from_numpy(self.params.spec, x)
        )

    def decode(self, msg: PhaseTwoMsg) -> FieldVector:
        """Removes the survivors' noise from the reply.

        Args:
            msg (PhaseTwoMsg): the server's reply.

        Raises:
            PhaseError: if the user has not sent or already decoded.
            NotASurvivorError: if the user is not part of the reply's survivor set.
            DroppedUserUnderNoDropoutScheme: if a NoDropout key meets U != [K].

        Returns:
            FieldVector: sum of the survivors' inputs.
        """
        self._expect(UserPhaseEnum.SENT)
        if not msg.survivors.fits(self.params.n_users):
            raise UnknownUserError(
                f"survivor set {msg.survivors} exceeds [1, {self.params.n_users}]"
            )
        if self.user_id not in msg.survivors:
            raise NotASurvivorError(
                f"user {self.user_id} is not in the survivor set {msg.survivors}"
            )
        check_vector(msg.payload, self.params, "reply")
        total = self.scheme.decode(
            msg.payload.to_numpy(),
            self.key.symbols(),
            self.user_id,
            msg.survivors.members,
        )
        self.result = FieldVector.from_numpy(self.params.spec, total)
        self.phase = UserPhaseEnum.DECODED
        logger.debug("user %d decoded the sum over %s", self.user_id, msg.survivors)
        return self.result


def user_phase_one(st: UserState) -> PhaseOneMsg:
    return st.phase_one()


def user_decode(st: UserState, msg: PhaseTwoMsg) -> FieldVector:
    return st.decode(msg)
