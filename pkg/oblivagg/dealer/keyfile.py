"""Binary key files.

Layout (little-endian): magic "OBKY", version u8, scheme u8, K u32, L u32,
q u64, followed by the packed key symbols. The header does not name a user;
one file is written for the source key and one per user key.
"""
import struct
from pathlib import Path
from typing import Tuple, Union

import numpy as np

from oblivagg.data_models.keys import AnyUserKey, SourceKey
from oblivagg.data_models.session import SessionParams
from oblivagg.dealer.dealer import USER_KEY_MAP
from oblivagg.errors import CodecError
from oblivagg.field.packing import pack_elements, unpack_elements
from oblivagg.transport.codec import SCHEME_CODES, scheme_from_code

MAGIC = b"OBKY"
VERSION = 1
_HEADER = struct.Struct("<4sBBIIQ")
HEADER_SIZE = _HEADER.size

TPath = Union[str, Path]


def encode_key_file(params: SessionParams, symbols: np.ndarray) -> bytes:
    header = _HEADER.pack(
        MAGIC,
        VERSION,
        SCHEME_CODES[params.scheme],
        params.n_users,
        params.length,
        params.q,
    )
    return header + pack_elements(symbols, params.spec)


def decode_key_file(data: bytes) -> Tuple[SessionParams, np.ndarray]:
    """Parses a key file.

    Raises:
        CodecError: on a truncated header, wrong magic or version, or malformed symbols.

    Returns:
        Tuple[SessionParams, np.ndarray]: the parameters in the header and the key symbols.
    """
    if len(data) < HEADER_SIZE:
        raise CodecError(f"key file too short: {len(data)} bytes")
    magic, version, scheme_code, n_users, length, q = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise CodecError(f"bad key file magic {magic!r}")
    if version != VERSION:
        raise CodecError(f"unsupported key file version {version}")
    try:
        params = SessionParams(
            n_users=n_users, spec=q, length=length, scheme=scheme_from_code(scheme_code)
        )
    except ValueError as err:
        raise CodecError(f"invalid key file header: {err}")
    body = data[HEADER_SIZE:]
    width = params.spec.element_width
    if len(body) % width != 0:
        raise CodecError(f"key body of {len(body)} bytes is not a multiple of {width}")
    return params, unpack_elements(body, params.spec, len(body) // width)


def write_source_key(path: TPath, params: SessionParams, src: SourceKey) -> None:
    Path(path).write_bytes(encode_key_file(params, src.symbols()))


def read_source_key(path: TPath) -> Tuple[SessionParams, SourceKey]:
    params, symbols = decode_key_file(Path(path).read_bytes())
    return params, SourceKey.from_symbols(params.spec, params.length, symbols)


def write_user_key(path: TPath, params: SessionParams, key: AnyUserKey) -> None:
    if key.scheme != params.scheme:
        raise CodecError(f"{key.type} does not belong to scheme {params.scheme.value}")
    Path(path).write_bytes(encode_key_file(params, key.symbols()))


def read_user_key(path: TPath, user_id: int) -> Tuple[SessionParams, AnyUserKey]:
    params, symbols = decode_key_file(Path(path).read_bytes())
    try:
        key = USER_KEY_MAP[params.scheme].from_symbols(
            user_id=user_id, spec=params.spec, length=params.length, symbols=symbols
        )
    except ValueError as err:
        raise CodecError(f"key file does not hold a user key: {err}")
    return params, key  # type: ignore
