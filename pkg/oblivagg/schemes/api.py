from oblivagg.schemes.dropout_tolerant import DropoutTolerantScheme  # noqa: F401
from oblivagg.schemes.mapper import map  # noqa: F401
from oblivagg.schemes.no_dropout import NoDropoutScheme  # noqa: F401
from oblivagg.schemes.scheme import Scheme  # noqa: F401
from oblivagg.schemes.summation import SummationScheme  # noqa: F401
