from typing import ClassVar, List, Literal, Union

import numpy as np
from pydantic import Field, conint, validator
from typing_extensions import Annotated

from oblivagg.data_models.base import FrozenModel
from oblivagg.data_models.enum import SchemeEnum
from oblivagg.data_models.field import FieldSpec, FieldVector


def _validate_same_shape(vectors: List[FieldVector]) -> List[FieldVector]:
    if len({v.spec for v in vectors}) > 1:
        raise ValueError("key vectors live over different fields")
    if len({len(v) for v in vectors}) > 1:
        raise ValueError("key vectors differ in length")
    return vectors


def _split(spec: FieldSpec, symbols: np.ndarray, length: int) -> List[FieldVector]:
    symbols = np.ravel(symbols)
    if length < 1 or len(symbols) % length != 0:
        raise ValueError(
            f"{len(symbols)} key symbols cannot be split into vectors of length {length}"
        )
    return [
        FieldVector.from_numpy(spec, symbols[i : i + length])
        for i in range(0, len(symbols), length)
    ]


class SourceKey(FrozenModel):
    """Source key: the noise vectors every user key is a function of.

    Attributes:
        noise (List[FieldVector]): the noise vectors N_1, N_2, ...
    """

    type: Literal["SourceKey"] = "SourceKey"
    noise: Annotated[List[FieldVector], Field(min_items=1)]

    _validate_noise = validator("noise", allow_reuse=True)(_validate_same_shape)

    @property
    def spec(self) -> FieldSpec:
        return self.noise[0].spec

    @property
    def length(self) -> int:
        return len(self.noise[0])

    def symbols(self) -> np.ndarray:
        return np.concatenate([v.to_numpy() for v in self.noise])

    def to_numpy(self) -> np.ndarray:
        """Noise as an array of shape (number of vectors, L)."""
        return np.stack([v.to_numpy() for v in self.noise])

    @classmethod
    def from_symbols(
        cls, spec: FieldSpec, length: int, symbols: np.ndarray
    ) -> "SourceKey":
        return cls(noise=_split(spec, symbols, length))


class UserKey(FrozenModel):
    """Base class of the key Z_k held by a single user.

    Attributes:
        user_id (int): id k of the user holding the key.
    """

    type: str
    user_id: conint(ge=1)  # type: ignore
    scheme: ClassVar[SchemeEnum]

    @property
    def spec(self) -> FieldSpec:
        raise NotImplementedError

    def symbols(self) -> np.ndarray:
        """All key symbols, concatenated in the order they are stored."""
        raise NotImplementedError

    @classmethod
    def from_symbols(
        cls, user_id: int, spec: FieldSpec, length: int, symbols: np.ndarray
    ) -> "UserKey":
        raise NotImplementedError


class NoDropoutUserKey(UserKey):
    """Key (N_k, N_1 + ... + N_K), 2L symbols.

    Attributes:
        own_noise (FieldVector): the noise N_k masking the user's own input.
        noise_total (FieldVector): the sum of all noise vectors, shared by every user.
    """

    type: Literal["NoDropoutUserKey"] = "NoDropoutUserKey"
    scheme: ClassVar[SchemeEnum] = SchemeEnum.NO_DROPOUT
    own_noise: FieldVector
    noise_total: FieldVector

    @validator("noise_total")
    def validate_noise_total(cls, noise_total, values):
        if "own_noise" in values:
            _validate_same_shape([values["own_noise"], noise_total])
        return noise_total

    @property
    def spec(self) -> FieldSpec:
        return self.own_noise.spec

    def symbols(self) -> np.ndarray:
        return np.concatenate([self.own_noise.to_numpy(), self.noise_total.to_numpy()])

    @classmethod
    def from_symbols(
        cls, user_id: int, spec: FieldSpec, length: int, symbols: np.ndarray
    ) -> "NoDropoutUserKey":
        parts = _split(spec, symbols, length)
        if len(parts) != 2:
            raise ValueError(f"expected {2 * length} key symbols, got {len(symbols)}")
        return cls(user_id=user_id, own_noise=parts[0], noise_total=parts[1])


class DropoutTolerantUserKey(UserKey):
    """Key (N_1, ..., N_K), K*L symbols; identical for every user.

    Attributes:
        all_noise (List[FieldVector]): every user's noise vector.
    """

    type: Literal["DropoutTolerantUserKey"] = "DropoutTolerantUserKey"
    scheme: ClassVar[SchemeEnum] = SchemeEnum.DROPOUT_TOLERANT
    all_noise: Annotated[List[FieldVector], Field(min_items=2)]

    _validate_all_noise = validator("all_noise", allow_reuse=True)(
        _validate_same_shape
    )

    @property
    def spec(self) -> FieldSpec:
        return self.all_noise[0].spec

    def symbols(self) -> np.ndarray:
        return np.concatenate([v.to_numpy() for v in self.all_noise])

    @classmethod
    def from_symbols(
        cls, user_id: int, spec: FieldSpec, length: int, symbols: np.ndarray
    ) -> "DropoutTolerantUserKey":
        return cls(user_id=user_id, all_noise=_split(spec, symbols, length))


class SummationUserKey(UserKey):
    """Key of the classic summation baseline: a single mask of L symbols.

    Attributes:
        mask (FieldVector): N_k for k < K, minus the sum of all other masks for k = K.
    """

    type: Literal["SummationUserKey"] = "SummationUserKey"
    scheme: ClassVar[SchemeEnum] = SchemeEnum.SUMMATION
    mask: FieldVector

    @property
    def spec(self) -> FieldSpec:
        return self.mask.spec

    def symbols(self) -> np.ndarray:
        return self.mask.to_numpy()

    @classmethod
    def from_symbols(
        cls, user_id: int, spec: FieldSpec, length: int, symbols: np.ndarray
    ) -> "SummationUserKey":
        parts = _split(spec, symbols, length)
        if len(parts) != 1:
            raise ValueError(f"expected {length} key symbols, got {len(symbols)}")
        return cls(user_id=user_id, mask=parts[0])


AnyUserKey = Union[NoDropoutUserKey, DropoutTolerantUserKey, SummationUserKey]
