from typing import ClassVar, Sequence

import numpy as np

from oblivagg.data_models.enum import SchemeEnum
from oblivagg.errors import ProtocolError
from oblivagg.field.arithmetic import mod_neg, mod_sum
from oblivagg.schemes.scheme import Scheme


class SummationScheme(Scheme):
    """Classic secure summation where the server learns the sum.

    Z_k = N_k for k < K and Z_K = -(N_1 + ... + N_{K-1}); X_k = W_k + Z_k. The
    masks cancel in X_1 + ... + X_K, so the server's view determines the input
    sum. Only used as a baseline for the auditor; there is no reply phase.
    """

    scheme_type: ClassVar[SchemeEnum] = SchemeEnum.SUMMATION
    has_reply: ClassVar[bool] = False

    @property
    def n_noise(self) -> int:
        return self.n_users - 1

    @property
    def user_key_length(self) -> int:
        return self.length

    def user_key(self, noise: np.ndarray, k: int) -> np.ndarray:
        self._check_user(k)
        if k < self.n_users:
            return noise[..., k - 1, :].copy()
        return mod_neg(mod_sum(noise[..., : self.n_noise, :], self.q, axis=-2), self.q)

    def noise_sum(self, z: np.ndarray, k: int, survivors: Sequence[int]) -> np.ndarray:
        raise ProtocolError("the summation baseline has no reply for users to decode")
