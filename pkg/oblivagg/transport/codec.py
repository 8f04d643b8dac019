"""Bit-exact wire codec.

Frames: length u32 | type u8 | payload. Integers are little-endian, field
elements are packed with `oblivagg.field.packing`.

- phase one: user id u32 | L packed elements
- phase two: |U| u32 | |U| sorted user ids u32 | L packed elements
- session hello: version u8 | scheme u8 | K u32 | L u32 | q u64
"""
import struct
from typing import Callable, Dict, Tuple

from oblivagg.data_models.enum import FrameTypeEnum, SchemeEnum
from oblivagg.data_models.field import FieldVector
from oblivagg.data_models.messages import Frame, PhaseOneMsg, PhaseTwoMsg, SurvivorSet
from oblivagg.data_models.session import SessionParams
from oblivagg.errors import CodecError
from oblivagg.field.packing import pack_elements, unpack_elements

PROTOCOL_VERSION = 1

SCHEME_CODES: Dict[SchemeEnum, int] = {
    SchemeEnum.NO_DROPOUT: 0x01,
    SchemeEnum.DROPOUT_TOLERANT: 0x02,
    SchemeEnum.SUMMATION: 0x03,
}

FRAME_TAGS: Dict[FrameTypeEnum, int] = {
    FrameTypeEnum.PHASE_ONE: 0x01,
    FrameTypeEnum.PHASE_TWO: 0x02,
    FrameTypeEnum.SESSION_HELLO: 0x03,
}

_U32 = struct.Struct("<I")
_FRAME_HEADER = struct.Struct("<IB")
_HELLO = struct.Struct("<BBIIQ")

FRAME_HEADER_SIZE = _FRAME_HEADER.size
PHASE_ONE_HEADER_SIZE = _U32.size


def scheme_from_code(code: int) -> SchemeEnum:
    for scheme, c in SCHEME_CODES.items():
        if c == code:
            return scheme
    raise CodecError(f"unknown scheme code {code:#04x}")


def _frame_type_from_tag(tag: int) -> FrameTypeEnum:
    for frame_type, t in FRAME_TAGS.items():
        if t == tag:
            return frame_type
    raise CodecError(f"unknown frame type tag {tag:#04x}")


def _check_user_id(user_id: int, params: SessionParams) -> None:
    if user_id < 1 or user_id > params.n_users:
        raise CodecError(f"user id {user_id} is not in [1, {params.n_users}]")


def _pack_payload(payload: FieldVector, params: SessionParams) -> bytes:
    if payload.spec != params.spec:
        raise CodecError(f"payload lives over F_{payload.spec.q}, session over F_{params.q}")
    if len(payload) != params.length:
        raise CodecError(f"payload has {len(payload)} elements, expected {params.length}")
    return pack_elements(payload.to_numpy(), params.spec)


def _unpack_payload(data: bytes, params: SessionParams) -> FieldVector:
    return FieldVector.from_numpy(
        params.spec, unpack_elements(data, params.spec, params.length)
    )


def encode_phase_one(msg: PhaseOneMsg, params: SessionParams) -> bytes:
    _check_user_id(msg.user_id, params)
    return _U32.pack(msg.user_id) + _pack_payload(msg.payload, params)


def decode_phase_one(data: bytes, params: SessionParams) -> PhaseOneMsg:
    """Decodes a phase-one payload.

    Raises:
        CodecError: on truncation, a length mismatch, a bad user id or an element >= q.
    """
    if len(data) < PHASE_ONE_HEADER_SIZE:
        raise CodecError(f"phase-one payload truncated: {len(data)} bytes")
    (user_id,) = _U32.unpack_from(data)
    _check_user_id(user_id, params)
    return PhaseOneMsg(
        user_id=user_id, payload=_unpack_payload(data[PHASE_ONE_HEADER_SIZE:], params)
    )


def phase_two_header_size(n_survivors: int) -> int:
    return _U32.size * (1 + n_survivors)


def encode_phase_two(msg: PhaseTwoMsg, params: SessionParams) -> bytes:
    members = msg.survivors.members
    for user_id in members:
        _check_user_id(user_id, params)
    ids = b"".join(_U32.pack(u) for u in members)
    return _U32.pack(len(members)) + ids + _pack_payload(msg.payload, params)


def decode_phase_two(data: bytes, params: SessionParams) -> PhaseTwoMsg:
    """Decodes a phase-two payload.

    Raises:
        CodecError: on truncation, an empty, unsorted or duplicated survivor list,
            a bad user id or an element >= q.
    """
    if len(data) < _U32.size:
        raise CodecError(f"phase-two payload truncated: {len(data)} bytes")
    (count,) = _U32.unpack_from(data)
    if count == 0:
        raise CodecError("phase-two payload carries an empty survivor set")
    if count > params.n_users:
        raise CodecError(f"{count} survivors exceed K={params.n_users}")
    header = phase_two_header_size(count)
    if len(data) < header:
        raise CodecError(f"phase-two payload truncated: {len(data)} bytes")
    members = [_U32.unpack_from(data, _U32.size * (1 + i))[0] for i in range(count)]
    for user_id in members:
        _check_user_id(user_id, params)
    for prev, cur in zip(members, members[1:]):
        if cur == prev:
            raise CodecError(f"duplicate survivor id {cur}")
        if cur < prev:
            raise CodecError(f"survivor ids {members} are not sorted")
    return PhaseTwoMsg(
        survivors=SurvivorSet(members=tuple(members)),
        payload=_unpack_payload(data[header:], params),
    )


def encode_hello(params: SessionParams) -> bytes:
    return _HELLO.pack(
        PROTOCOL_VERSION,
        SCHEME_CODES[params.scheme],
        params.n_users,
        params.length,
        params.q,
    )


def decode_hello(data: bytes, broadcast_reply: bool = False) -> SessionParams:
    """Decodes a session hello into session parameters.

    The broadcast flag is not part of the hello, it only changes the fan-out.
    """
    if len(data) != _HELLO.size:
        raise CodecError(f"session hello needs {_HELLO.size} bytes, got {len(data)}")
    version, scheme_code, n_users, length, q = _HELLO.unpack(data)
    if version != PROTOCOL_VERSION:
        raise CodecError(f"unsupported protocol version {version}")
    try:
        return SessionParams(
            n_users=n_users,
            spec=q,
            length=length,
            scheme=scheme_from_code(scheme_code),
            broadcast_reply=broadcast_reply,
        )
    except ValueError as err:
        raise CodecError(f"invalid session hello: {err}")


def encode_frame(frame: Frame) -> bytes:
    return _FRAME_HEADER.pack(frame.length, FRAME_TAGS[frame.frame_type]) + frame.payload


def decode_frame_header(data: bytes) -> Tuple[int, FrameTypeEnum]:
    if len(data) != FRAME_HEADER_SIZE:
        raise CodecError(f"frame header needs {FRAME_HEADER_SIZE} bytes, got {len(data)}")
    length, tag = _FRAME_HEADER.unpack(data)
    return length, _frame_type_from_tag(tag)


def decode_frame(data: bytes) -> Frame:
    """Decodes exactly one frame.

    Raises:
        CodecError: on truncation, trailing bytes or an unknown type tag.
    """
    if len(data) < FRAME_HEADER_SIZE:
        raise CodecError(f"frame truncated: {len(data)} bytes")
    length, frame_type = decode_frame_header(data[:FRAME_HEADER_SIZE])
    payload = data[FRAME_HEADER_SIZE:]
    if len(payload) != length:
        raise CodecError(f"frame announces {length} payload bytes, got {len(payload)}")
    return Frame(frame_type=frame_type, payload=payload)


def read_frame(read_exactly: Callable[[int], bytes]) -> Frame:
    """Reads one frame from a byte stream.

    Args:
        read_exactly (Callable[[int], bytes]): returns exactly n bytes or raises.
    """
    length, frame_type = decode_frame_header(read_exactly(FRAME_HEADER_SIZE))
    return Frame(frame_type=frame_type, payload=read_exactly(length))


def expect(frame: Frame, frame_type: FrameTypeEnum) -> bytes:
    if frame.frame_type != frame_type:
        raise CodecError(
            f"expected a {frame_type.value} frame, got {frame.frame_type.value}"
        )
    return frame.payload
