from typing import ClassVar, Sequence

import numpy as np

from oblivagg.data_models.enum import SchemeEnum
from oblivagg.field.arithmetic import mod_sum
from oblivagg.schemes.scheme import Scheme


class DropoutTolerantScheme(Scheme):
    """Z_k = (N_1, ..., N_K) for every user, X_k = W_k + N_k, Y^U = sum of X_u over U.

    Every user holds all K*L noise symbols and can therefore remove the noise
    of any survivor set.
    """

    scheme_type: ClassVar[SchemeEnum] = SchemeEnum.DROPOUT_TOLERANT
    tolerates_dropouts: ClassVar[bool] = True

    @property
    def user_key_length(self) -> int:
        return self.n_users * self.length

    def user_key(self, noise: np.ndarray, k: int) -> np.ndarray:
        self._check_user(k)
        return self.source_key(noise).copy()

    def _noise_rows(self, z: np.ndarray) -> np.ndarray:
        return z.reshape(z.shape[:-1] + (self.n_users, self.length))

    def mask(self, z: np.ndarray, k: int) -> np.ndarray:
        return self._noise_rows(z)[..., k - 1, :]

    def noise_sum(self, z: np.ndarray, k: int, survivors: Sequence[int]) -> np.ndarray:
        idx = [u - 1 for u in survivors]
        return mod_sum(self._noise_rows(z)[..., idx, :], self.q, axis=-2)
