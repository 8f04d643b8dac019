from fractions import Fraction
from typing import Tuple

from pydantic import conint

from oblivagg.data_models.base import BaseModel, FrozenModel
from oblivagg.data_models.enum import RateVerdictEnum
from oblivagg.data_models.session import SessionParams

RATE_NAMES = ("R_X", "R_Y", "R_Z", "R_ZSigma")


class RateTuple(FrozenModel):
    """Measured symbol counts, turned into exact rates by dividing through L.

    Attributes:
        l_x (int): symbols per phase-one message.
        l_y (int): symbols per phase-two message.
        l_z (int): symbols per user key.
        l_z_sigma (int): symbols of the source key.
        length (int): input length L.
    """

    l_x: conint(ge=0)  # type: ignore
    l_y: conint(ge=0)  # type: ignore
    l_z: conint(ge=0)  # type: ignore
    l_z_sigma: conint(ge=0)  # type: ignore
    length: conint(ge=1)  # type: ignore

    @property
    def r_x(self) -> Fraction:
        return Fraction(self.l_x, self.length)

    @property
    def r_y(self) -> Fraction:
        return Fraction(self.l_y, self.length)

    @property
    def r_z(self) -> Fraction:
        return Fraction(self.l_z, self.length)

    @property
    def r_z_sigma(self) -> Fraction:
        return Fraction(self.l_z_sigma, self.length)

    def as_fractions(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.r_x, self.r_y, self.r_z, self.r_z_sigma)

    def __str__(self) -> str:
        return "(" + ", ".join(str(r) for r in self.as_fractions()) + ")"


class RateReport(BaseModel):
    """Measured rates against the lower bounds of the optimal region.

    Attributes:
        params (SessionParams): measured session parameters.
        measured (RateTuple): rates of the implementation.
        optimal (RateTuple): lower bounds, given with length 1.
        verdict (RateVerdictEnum): classification of the measured tuple.
    """

    params: SessionParams
    measured: RateTuple
    optimal: RateTuple
    verdict: RateVerdictEnum

    @property
    def is_optimal(self) -> bool:
        return self.verdict == RateVerdictEnum.OPTIMAL
