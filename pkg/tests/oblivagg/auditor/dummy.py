import numpy as np

from oblivagg.field.api import mod_neg, mod_sum
from oblivagg.schemes.api import NoDropoutScheme


class NoiseReuseScheme(NoDropoutScheme):
    """Broken no-dropout scheme where the last user reuses the first user's noise."""

    def user_key(self, noise: np.ndarray, k: int) -> np.ndarray:
        reused = noise.copy()
        reused[..., self.n_users - 1, :] = noise[..., 0, :]
        return super().user_key(reused, k)


class CorrelatedReplyNoiseScheme(NoDropoutScheme):
    """Broken no-dropout scheme whose noise cancels in the reply."""

    def user_key(self, noise: np.ndarray, k: int) -> np.ndarray:
        correlated = noise.copy()
        head = noise[..., : self.n_users - 1, :]
        correlated[..., self.n_users - 1, :] = mod_neg(mod_sum(head, self.q, axis=-2), self.q)
        return super().user_key(correlated, k)


class PaddedKeyScheme(NoDropoutScheme):
    """Secure but wasteful: every key carries one extra copy of a noise symbol."""

    @property
    def user_key_length(self) -> int:
        return 2 * self.length + 1

    def user_key(self, noise: np.ndarray, k: int) -> np.ndarray:
        z = super().user_key(noise, k)
        return np.concatenate([z, z[..., :1]], axis=-1)
