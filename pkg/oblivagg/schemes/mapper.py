from typing import Dict, Type

from oblivagg.data_models.enum import SchemeEnum
from oblivagg.data_models.session import SessionParams
from oblivagg.schemes.dropout_tolerant import DropoutTolerantScheme
from oblivagg.schemes.no_dropout import NoDropoutScheme
from oblivagg.schemes.scheme import Scheme
from oblivagg.schemes.summation import SummationScheme

SCHEME_MAP: Dict[SchemeEnum, Type[Scheme]] = {
    SchemeEnum.NO_DROPOUT: NoDropoutScheme,
    SchemeEnum.DROPOUT_TOLERANT: DropoutTolerantScheme,
    SchemeEnum.SUMMATION: SummationScheme,
}


def map(params: SessionParams) -> Scheme:
    cls = SCHEME_MAP[params.scheme]
    return cls.from_spec(params=params)
