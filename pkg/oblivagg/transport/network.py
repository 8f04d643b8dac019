import logging
import warnings
from typing import Dict, List, Optional, Sequence

import numpy as np

from oblivagg.data_models.enum import FrameTypeEnum, TransportEnum
from oblivagg.data_models.field import FieldVector
from oblivagg.data_models.keys import SourceKey
from oblivagg.data_models.messages import Frame, PhaseTwoMsg
from oblivagg.data_models.session import SessionParams
from oblivagg.data_models.transport import DropPlan, SessionOutcome
from oblivagg.dealer.dealer import check_source_key, derive_user_keys, generate_source_key
from oblivagg.errors import CodecError, ProtocolError, UnknownUserError
from oblivagg.field.vectors import TSeed, make_rng
from oblivagg.protocol.server import ServerState
from oblivagg.protocol.user import UserState
from oblivagg.transport.channel import Channel, make_channel
from oblivagg.transport.codec import (
    decode_hello,
    decode_phase_one,
    decode_phase_two,
    encode_hello,
    encode_phase_one,
    encode_phase_two,
    expect,
)

logger = logging.getLogger(__name__)


def _check_drop_plan(drop_plan: DropPlan, params: SessionParams) -> None:
    outside = [k for k in drop_plan.dropped if k > params.n_users]
    if outside:
        raise UnknownUserError(f"dropped users {outside} are not in [1, {params.n_users}]")


def delivery_order(
    senders: Sequence[int], shuffle: bool, rng: np.random.Generator
) -> List[int]:
    """Phase-one delivery order, user-id order unless shuffled."""
    order = sorted(senders)
    if shuffle:
        order = [order[i] for i in rng.permutation(len(order))]
    return order


def _greet(channel: Channel, params: SessionParams, n_users: int) -> None:
    hello = Frame(frame_type=FrameTypeEnum.SESSION_HELLO, payload=encode_hello(params))
    for _ in range(n_users):
        received = decode_hello(
            expect(channel.transfer(hello), FrameTypeEnum.SESSION_HELLO),
            broadcast_reply=params.broadcast_reply,
        )
        if received != params:
            raise CodecError(f"session hello announced {received}, expected {params}")


def _fan_out(
    channel: Channel,
    msg: PhaseTwoMsg,
    recipients: Sequence[int],
    params: SessionParams,
) -> Dict[int, PhaseTwoMsg]:
    frame = Frame(frame_type=FrameTypeEnum.PHASE_TWO, payload=encode_phase_two(msg, params))
    if len(recipients) == 0:
        return {}
    if params.broadcast_reply:
        received = decode_phase_two(
            expect(channel.transfer(frame), FrameTypeEnum.PHASE_TWO), params
        )
        return {k: received for k in recipients}
    return {
        k: decode_phase_two(expect(channel.transfer(frame), FrameTypeEnum.PHASE_TWO), params)
        for k in recipients
    }


def run_session(
    params: SessionParams,
    inputs: Sequence[FieldVector],
    drop_plan: Optional[DropPlan] = None,
    seed: TSeed = None,
    shuffle: bool = False,
    transport: TransportEnum = TransportEnum.SIM,
    source_key: Optional[SourceKey] = None,
) -> SessionOutcome:
    """Runs one aggregation session end to end.

    The dealer draws the keys, every user that does not drop before sending
    delivers its phase-one frame, the server closes collection and replies,
    and every survivor that is still online decodes.

    Args:
        params (SessionParams): session parameters.
        inputs (Sequence[FieldVector]): the K inputs, W_1 first.
        drop_plan (DropPlan, optional): users dropping before or after sending.
        seed (int | SeedSequence, optional): seed of keys and delivery order.
        shuffle (bool, optional): deliver phase-one frames in a seeded random order.
        transport (TransportEnum, optional): in-process frames or a socket pair.
        source_key (SourceKey, optional): dealer key to run with instead of drawing one.

    Raises:
        ValueError: if the number of inputs is not K.
        UnknownUserError: if the drop plan names users outside [1, K].
        DroppedUserUnderNoDropoutScheme: if users drop before sending under NoDropout.
        KeyMismatchError: if `source_key` does not fit the session.

    Returns:
        SessionOutcome: realized U and the decoded sum or error per recipient.
    """
    drop_plan = drop_plan if drop_plan is not None else DropPlan()
    if len(inputs) != params.n_users:
        raise ValueError(f"{params.n_users} users need {params.n_users} inputs, got {len(inputs)}")
    _check_drop_plan(drop_plan, params)

    key_seed, order_seed = np.random.SeedSequence(seed).spawn(2)
    if source_key is None:
        src = generate_source_key(params, make_rng(key_seed))
    else:
        check_source_key(source_key, params)
        src = source_key
    keys = derive_user_keys(src, params)
    users = {
        k: UserState(params=params, user_id=k, inputs=inputs[k - 1], key=keys[k - 1])
        for k in params.users
    }
    server = ServerState(params)

    with make_channel(transport) as channel:
        _greet(channel, params, params.n_users)
        senders = [k for k in params.users if k not in drop_plan.before_send]
        for k in delivery_order(senders, shuffle, make_rng(order_seed)):
            frame = Frame(
                frame_type=FrameTypeEnum.PHASE_ONE,
                payload=encode_phase_one(users[k].phase_one(), params),
            )
            received = channel.transfer(frame)
            server.receive(decode_phase_one(expect(received, FrameTypeEnum.PHASE_ONE), params))

        survivors = server.close()
        reply = server.reply()
        recipients = [k for k in survivors.members if k not in drop_plan.after_send]
        if params.broadcast_reply and len(recipients) == 1:
            warnings.warn("broadcast reply with a single recipient is a unicast")
        frames_before = channel.frames
        replies = _fan_out(channel, reply, recipients, params)
        reply_frames = channel.frames - frames_before

    decoded: Dict[int, FieldVector] = {}
    errors: Dict[int, str] = {}
    for k, msg in replies.items():
        try:
            decoded[k] = users[k].decode(msg)
        except ProtocolError as err:
            logger.warning("user %d failed to decode: %s", k, err)
            errors[k] = str(err)
    logger.info(
        "session with K=%d finished, U=%s, %d reply frames",
        params.n_users,
        survivors,
        reply_frames,
    )
    return SessionOutcome(
        survivors=survivors,
        decoded=decoded,
        errors=errors,
        drop_plan=drop_plan,
        reply_frames=reply_frames,
        seed=seed if isinstance(seed, int) else None,
        source_key=src,
    )
