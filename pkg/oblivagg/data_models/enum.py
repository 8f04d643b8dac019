from enum import Enum


class SchemeEnum(Enum):
    """Enumeration of the key/message designs.

    `NO_DROPOUT` and `DROPOUT_TOLERANT` are the two oblivious-server schemes.
    `SUMMATION` is the classic design in which the server itself computes the
    sum; it exists only as an audit baseline and has no reply phase.
    """

    NO_DROPOUT = "NO_DROPOUT"
    DROPOUT_TOLERANT = "DROPOUT_TOLERANT"
    SUMMATION = "SUMMATION"


class UserPhaseEnum(Enum):
    FRESH = "FRESH"
    SENT = "SENT"
    DECODED = "DECODED"


class ServerPhaseEnum(Enum):
    COLLECTING = "COLLECTING"
    CLOSED = "CLOSED"


class FrameTypeEnum(Enum):
    PHASE_ONE = "PHASE_ONE"
    PHASE_TWO = "PHASE_TWO"
    SESSION_HELLO = "SESSION_HELLO"


class TransportEnum(Enum):
    """In-process simulated network or frames over socket byte streams."""

    SIM = "SIM"
    STREAM = "STREAM"


class VerdictEnum(Enum):
    """Outcome of a single audited constraint.

    `PASS_DEGENERATE` marks a conditional-independence check in which the
    conditioning already determines the protected variable in every cell.
    """

    PASS = "PASS"
    PASS_DEGENERATE = "PASS_DEGENERATE"
    FAIL = "FAIL"


class RateVerdictEnum(Enum):
    OPTIMAL = "OPTIMAL"
    SUBOPTIMAL = "SUBOPTIMAL"
    BELOW_BOUND = "BELOW_BOUND"
    INVALID = "INVALID"
