import logging
from typing import Dict, List, Optional, Type

import numpy as np

import oblivagg.schemes.api as schemes
from oblivagg.data_models.enum import SchemeEnum
from oblivagg.data_models.keys import (
    AnyUserKey,
    DropoutTolerantUserKey,
    NoDropoutUserKey,
    SourceKey,
    SummationUserKey,
    UserKey,
)
from oblivagg.data_models.session import SessionParams
from oblivagg.errors import KeyMismatchError, UnknownUserError
from oblivagg.field.vectors import make_rng, sample_uniform

logger = logging.getLogger(__name__)

USER_KEY_MAP: Dict[SchemeEnum, Type[UserKey]] = {
    SchemeEnum.NO_DROPOUT: NoDropoutUserKey,
    SchemeEnum.DROPOUT_TOLERANT: DropoutTolerantUserKey,
    SchemeEnum.SUMMATION: SummationUserKey,
}


def generate_source_key(
    params: SessionParams, rng: Optional[np.random.Generator] = None
) -> SourceKey:
    """Draws the source key: independent uniform noise vectors of length L.

    The oblivious schemes use K vectors (K*L symbols); the summation baseline
    uses K-1.

    Args:
        params (SessionParams): session parameters.
        rng (np.random.Generator, optional): seeded generator, see `make_rng`.

    Returns:
        SourceKey: the source key.
    """
    rng = rng if rng is not None else make_rng()
    scheme = schemes.map(params)
    noise = [sample_uniform(params.spec, params.length, rng) for _ in range(scheme.n_noise)]
    logger.debug(
        "generated source key of %d symbols for K=%d", scheme.source_key_length, params.n_users
    )
    return SourceKey(noise=noise)


def check_source_key(src: SourceKey, params: SessionParams) -> None:
    """Validates that a source key belongs to a session.

    Raises:
        KeyMismatchError: if field, length or number of noise vectors do not fit.
    """
    scheme = schemes.map(params)
    if src.spec != params.spec:
        raise KeyMismatchError(f"source key lives over F_{src.spec.q}, session over F_{params.q}")
    if src.length != params.length:
        raise KeyMismatchError(f"source key vectors have length {src.length}, expected {params.length}")
    if len(src.noise) != scheme.n_noise:
        raise KeyMismatchError(
            f"source key holds {len(src.noise)} noise vectors, expected {scheme.n_noise}"
        )


def derive_user_key(src: SourceKey, k: int, params: SessionParams) -> AnyUserKey:
    """Derives the key Z_k of user k as a deterministic function of the source key.

    Args:
        src (SourceKey): the source key.
        k (int): user id in [1, K].
        params (SessionParams): session parameters.

    Raises:
        UnknownUserError: if k is not in [1, K].
        KeyMismatchError: if the source key does not belong to the session.

    Returns:
        AnyUserKey: key of the type matching the session's scheme.
    """
    if k < 1 or k > params.n_users:
        raise UnknownUserError(f"user {k} is not in [1, {params.n_users}]")
    check_source_key(src, params)
    scheme = schemes.map(params)
    symbols = scheme.user_key(src.to_numpy(), k)
    return USER_KEY_MAP[params.scheme].from_symbols(  # type: ignore
        user_id=k, spec=params.spec, length=params.length, symbols=symbols
    )


def derive_user_keys(src: SourceKey, params: SessionParams) -> List[AnyUserKey]:
    return [derive_user_key(src, k, params) for k in params.users]
