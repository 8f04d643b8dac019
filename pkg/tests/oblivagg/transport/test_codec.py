from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oblivagg.data_models.api import (
    FieldVector,
    Frame,
    FrameTypeEnum,
    PhaseOneMsg,
    PhaseTwoMsg,
    SchemeEnum,
    SessionParams,
    SurvivorSet,
)
from oblivagg.errors import CodecError
from oblivagg.transport.api import (
    decode_frame,
    decode_hello,
    decode_phase_one,
    decode_phase_two,
    encode_frame,
    encode_hello,
    encode_phase_one,
    encode_phase_two,
    read_frame,
)

DATA = Path(__file__).parent / "data"

P1_PARAMS = SessionParams(n_users=8, spec=257, length=2)
P2_PARAMS = SessionParams(n_users=3, spec=5, length=1, scheme=SchemeEnum.DROPOUT_TOLERANT)


def test_phase_one_golden():
    golden = (DATA / "phase_one.bin").read_bytes()
    msg = PhaseOneMsg(user_id=7, payload=FieldVector.of(257, [255, 256]))
    frame = Frame(frame_type=FrameTypeEnum.PHASE_ONE, payload=encode_phase_one(msg, P1_PARAMS))
    assert encode_frame(frame) == golden
    decoded = decode_frame(golden)
    assert decoded.frame_type == FrameTypeEnum.PHASE_ONE
    assert decode_phase_one(decoded.payload, P1_PARAMS) == msg


def test_phase_two_golden():
    golden = (DATA / "phase_two.bin").read_bytes()
    msg = PhaseTwoMsg(survivors=SurvivorSet(members=(1, 3)), payload=FieldVector.of(5, [0]))
    frame = Frame(frame_type=FrameTypeEnum.PHASE_TWO, payload=encode_phase_two(msg, P2_PARAMS))
    assert encode_frame(frame) == golden
    assert decode_phase_two(decode_frame(golden).payload, P2_PARAMS) == msg


def test_hello():
    data = encode_hello(P2_PARAMS)
    assert data == bytes([1, 2, 3, 0, 0, 0, 1, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 0])
    assert decode_hello(data) == P2_PARAMS
    assert decode_hello(data, broadcast_reply=True).broadcast_reply


@pytest.mark.parametrize(
    "data",
    [
        bytes([1, 2, 3, 0, 0, 0, 1, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0]),
        bytes([2, 2, 3, 0, 0, 0, 1, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 0]),
        bytes([1, 9, 3, 0, 0, 0, 1, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 0]),
        bytes([1, 2, 3, 0, 0, 0, 1, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0]),
        bytes([1, 2, 1, 0, 0, 0, 1, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 0]),
    ],
)
def test_hello_invalid(data):
    with pytest.raises(CodecError):
        decode_hello(data)


@pytest.mark.parametrize(
    "data",
    [
        b"",
        b"\x08\x00\x00",
        b"\x08\x00\x00\x00\x01\x07\x00\x00\x00\xff\x00\x00",
        b"\x08\x00\x00\x00\x01\x07\x00\x00\x00\xff\x00\x00\x01\x00",
        b"\x08\x00\x00\x00\x09\x07\x00\x00\x00\xff\x00\x00\x01",
    ],
)
def test_frame_invalid(data):
    with pytest.raises(CodecError):
        decode_frame(data)


@pytest.mark.parametrize(
    "payload",
    [
        b"\x07\x00\x00",
        b"\x07\x00\x00\x00\xff\x00",
        b"\x07\x00\x00\x00\xff\x00\x00\x01\x00",
        b"\x09\x00\x00\x00\xff\x00\x00\x01",
        b"\x00\x00\x00\x00\xff\x00\x00\x01",
        b"\x07\x00\x00\x00\x01\x01\x00\x01",
    ],
)
def test_phase_one_invalid(payload):
    with pytest.raises(CodecError):
        decode_phase_one(payload, P1_PARAMS)


@pytest.mark.parametrize(
    "payload",
    [
        b"\x02\x00",
        b"\x00\x00\x00\x00\x00",
        b"\x04\x00\x00\x00\x01\x00\x00\x00\x02\x00\x00\x00\x03\x00\x00\x00\x03\x00\x00\x00\x00",
        b"\x02\x00\x00\x00\x01\x00\x00\x00",
        b"\x02\x00\x00\x00\x03\x00\x00\x00\x01\x00\x00\x00\x00",
        b"\x02\x00\x00\x00\x01\x00\x00\x00\x01\x00\x00\x00\x00",
        b"\x02\x00\x00\x00\x01\x00\x00\x00\x04\x00\x00\x00\x00",
        b"\x02\x00\x00\x00\x01\x00\x00\x00\x03\x00\x00\x00\x05",
        b"\x02\x00\x00\x00\x01\x00\x00\x00\x03\x00\x00\x00",
    ],
)
def test_phase_two_invalid(payload):
    with pytest.raises(CodecError):
        decode_phase_two(payload, P2_PARAMS)


def test_encode_rejects_foreign_payload():
    with pytest.raises(CodecError):
        encode_phase_one(PhaseOneMsg(user_id=1, payload=FieldVector.of(7, [1, 2])), P1_PARAMS)
    with pytest.raises(CodecError):
        encode_phase_one(PhaseOneMsg(user_id=1, payload=FieldVector.of(257, [1])), P1_PARAMS)
    with pytest.raises(CodecError):
        encode_phase_one(PhaseOneMsg(user_id=9, payload=FieldVector.of(257, [1, 2])), P1_PARAMS)


def test_read_frame_from_stream():
    golden = (DATA / "phase_one.bin").read_bytes() + (DATA / "phase_two.bin").read_bytes()
    pos = 0

    def read_exactly(n: int) -> bytes:
        nonlocal pos
        chunk = golden[pos : pos + n]
        pos += n
        return chunk

    assert read_frame(read_exactly).frame_type == FrameTypeEnum.PHASE_ONE
    assert read_frame(read_exactly).frame_type == FrameTypeEnum.PHASE_TWO
    assert pos == len(golden)


def _decode_any(data: bytes) -> None:
    try:
        frame = decode_frame(data)
    except CodecError:
        return
    for decode, params in ((decode_phase_one, P1_PARAMS), (decode_phase_two, P2_PARAMS)):
        try:
            decode(frame.payload, params)
        except CodecError:
            pass
    try:
        decode_hello(frame.payload)
    except CodecError:
        pass


@given(st.binary(max_size=64))
def test_fuzz_decoders_raise_only_codec_errors(data):
    _decode_any(data)


@given(st.binary(min_size=1, max_size=40))
def test_fuzz_framed_payloads(payload):
    for tag in (1, 2, 3):
        _decode_any(len(payload).to_bytes(4, "little") + bytes([tag]) + payload)


@pytest.mark.slow
@settings(max_examples=100_000, deadline=None)
@given(st.binary(max_size=64))
def test_fuzz_decoders_many(data):
    _decode_any(data)


FUZZ_PRIMES = [2, 257, 65537, 2**63 - 25, 2**64 - 59]


@st.composite
def session_params(draw):
    return SessionParams(
        n_users=draw(st.integers(min_value=2, max_value=40)),
        spec=draw(st.sampled_from(FUZZ_PRIMES)),
        length=draw(st.integers(min_value=1, max_value=8)),
        scheme=draw(st.sampled_from([SchemeEnum.NO_DROPOUT, SchemeEnum.DROPOUT_TOLERANT])),
    )


def _payload(draw, params):
    elems = draw(
        st.lists(
            st.integers(min_value=0, max_value=params.q - 1),
            min_size=params.length,
            max_size=params.length,
        )
    )
    return FieldVector.of(params.q, elems)


@st.composite
def phase_one_messages(draw):
    params = draw(session_params())
    user_id = draw(st.integers(min_value=1, max_value=params.n_users))
    return params, PhaseOneMsg(user_id=user_id, payload=_payload(draw, params))


@st.composite
def phase_two_messages(draw):
    params = draw(session_params())
    members = draw(st.sets(st.integers(min_value=1, max_value=params.n_users), min_size=1))
    survivors = SurvivorSet(members=tuple(sorted(members)))
    return params, PhaseTwoMsg(survivors=survivors, payload=_payload(draw, params))


def _roundtrip(params, msg):
    if isinstance(msg, PhaseOneMsg):
        frame = Frame(frame_type=FrameTypeEnum.PHASE_ONE, payload=encode_phase_one(msg, params))
        decoded = decode_frame(encode_frame(frame))
        assert decoded == frame
        assert decode_phase_one(decoded.payload, params) == msg
    else:
        frame = Frame(frame_type=FrameTypeEnum.PHASE_TWO, payload=encode_phase_two(msg, params))
        decoded = decode_frame(encode_frame(frame))
        assert decoded == frame
        assert decode_phase_two(decoded.payload, params) == msg


@given(phase_one_messages())
def test_phase_one_roundtrip(case):
    _roundtrip(*case)


@given(phase_two_messages())
def test_phase_two_roundtrip(case):
    _roundtrip(*case)


@given(session_params())
def test_hello_roundtrip(params):
    assert decode_hello(encode_hello(params)) == params


@pytest.mark.slow
@settings(max_examples=100_000, deadline=None)
@given(st.one_of(phase_one_messages(), phase_two_messages()))
def test_roundtrip_many(case):
    _roundtrip(*case)
