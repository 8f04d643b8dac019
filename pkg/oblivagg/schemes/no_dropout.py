from typing import ClassVar, Sequence

import numpy as np

from oblivagg.data_models.enum import SchemeEnum
from oblivagg.errors import DroppedUserUnderNoDropoutScheme
from oblivagg.field.arithmetic import mod_sum
from oblivagg.schemes.scheme import Scheme


class NoDropoutScheme(Scheme):
    """Z_k = (N_k, N_1 + ... + N_K), X_k = W_k + N_k, Y = X_1 + ... + X_K.

    The key holds 2L symbols. Users can only remove the noise of all K users,
    so every user has to survive.
    """

    scheme_type: ClassVar[SchemeEnum] = SchemeEnum.NO_DROPOUT

    @property
    def user_key_length(self) -> int:
        return 2 * self.length

    def user_key(self, noise: np.ndarray, k: int) -> np.ndarray:
        self._check_user(k)
        total = mod_sum(noise[..., : self.n_users, :], self.q, axis=-2)
        return np.concatenate([noise[..., k - 1, :], total], axis=-1)

    def noise_sum(self, z: np.ndarray, k: int, survivors: Sequence[int]) -> np.ndarray:
        if tuple(survivors) != tuple(range(1, self.n_users + 1)):
            raise DroppedUserUnderNoDropoutScheme(
                f"survivors {tuple(survivors)} differ from all {self.n_users} users, "
                "the keys only remove the noise of the full sum"
            )
        return z[..., self.length : 2 * self.length]
