from abc import ABC, abstractmethod
from typing import ClassVar, Sequence

import numpy as np

from oblivagg.data_models.enum import SchemeEnum
from oblivagg.data_models.session import SessionParams
from oblivagg.errors import UnknownUserError
from oblivagg.field.arithmetic import mod_add, mod_sub, mod_sum


class Scheme(ABC):
    """Base class of a key and message design.

    All methods work on numpy uint64 arrays with arbitrary leading batch
    dimensions, so the same code serves a single session and the exhaustive
    enumeration of the auditor. Noise arrays have shape (..., K, L), inputs and
    messages (..., L), user keys (..., L_Z).

    Attributes:
        params (SessionParams): the session the scheme is bound to.
    """

    scheme_type: ClassVar[SchemeEnum]
    tolerates_dropouts: ClassVar[bool] = False
    has_reply: ClassVar[bool] = True

    def __init__(self, params: SessionParams):
        self.params = params
        self.q = params.spec.q
        self.n_users = params.n_users
        self.length = params.length

    @classmethod
    def from_spec(cls, params: SessionParams) -> "Scheme":
        """Used by the mapper to map from session parameters to a functional scheme."""
        return cls(params=params)

    def _check_user(self, k: int) -> None:
        if k < 1 or k > self.n_users:
            raise UnknownUserError(f"user {k} is not in [1, {self.n_users}]")

    @property
    def n_noise(self) -> int:
        """Number of noise vectors making up the source key."""
        return self.n_users

    @property
    def source_key_length(self) -> int:
        return self.n_noise * self.length

    @property
    @abstractmethod
    def user_key_length(self) -> int:
        pass

    def source_key(self, noise: np.ndarray) -> np.ndarray:
        """Source key symbols, the noise vectors the scheme actually uses."""
        used = noise[..., : self.n_noise, :]
        return used.reshape(used.shape[:-2] + (self.source_key_length,))

    @abstractmethod
    def user_key(self, noise: np.ndarray, k: int) -> np.ndarray:
        """Key of user k, a function of the source key only."""
        pass

    def mask(self, z: np.ndarray, k: int) -> np.ndarray:
        """The part of the key of user k that masks its input."""
        return z[..., : self.length]

    def phase_one(self, w: np.ndarray, z: np.ndarray, k: int) -> np.ndarray:
        """X_k, a function of the input and the key of user k."""
        self._check_user(k)
        return mod_add(w, self.mask(z, k), self.q)

    def phase_one_all(self, w: np.ndarray, noise: np.ndarray) -> np.ndarray:
        """Every user's phase-one message, shape (..., K, L)."""
        return np.stack(
            [
                self.phase_one(w[..., k - 1, :], self.user_key(noise, k), k)
                for k in range(1, self.n_users + 1)
            ],
            axis=-2,
        )

    def reply(self, x: np.ndarray, survivors: Sequence[int]) -> np.ndarray:
        """Y^U, the sum of the survivors' phase-one messages.

        Args:
            x (np.ndarray): phase-one messages of all users, shape (..., K, L). Rows
                of users outside `survivors` are ignored.
            survivors (Sequence[int]): the survivor set U.
        """
        idx = [u - 1 for u in survivors]
        return mod_sum(x[..., idx, :], self.q, axis=-2)

    @abstractmethod
    def noise_sum(self, z: np.ndarray, k: int, survivors: Sequence[int]) -> np.ndarray:
        """Sum of the survivors' noise as known to user k."""
        pass

    def decode(
        self, y: np.ndarray, z: np.ndarray, k: int, survivors: Sequence[int]
    ) -> np.ndarray:
        """Recovers the survivors' input sum from the reply and the key of user k."""
        self._check_user(k)
        return mod_sub(y, self.noise_sum(z, k, survivors), self.q)
