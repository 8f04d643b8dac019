from typing import Optional


class ObliviousAggregationError(Exception):
    """Base Error for oblivagg"""

    pass


class FieldError(ObliviousAggregationError, ValueError):
    """Base Error for arithmetic over a prime field."""

    pass


class LengthMismatchError(FieldError):
    """Raised when two field vectors differ in length."""

    pass


class FieldSpecMismatchError(FieldError):
    """Raised when two field vectors live over different fields."""

    pass


class EmptySumError(FieldError):
    """Raised when summing an empty sequence of vectors."""

    pass


class ProtocolError(ObliviousAggregationError, ValueError):
    """Base Error for the two-phase aggregation protocol."""

    pass


class PhaseError(ProtocolError):
    """Raised when an operation is invoked in the wrong state-machine phase."""

    pass


class KeyMismatchError(ProtocolError):
    """Raised when a key does not fit the session parameters."""

    pass


class UnknownUserError(ProtocolError):
    """Raised when a user id lies outside of [1, K]."""

    pass


class DuplicateMessageError(ProtocolError):
    """Raised when the server receives a second phase-one message of a user."""

    pass


class EmptySurvivorSetError(ProtocolError):
    """Raised when the server closes collection without any message."""

    pass


class NotASurvivorError(ProtocolError):
    """Raised when a user decodes a reply for a survivor set it is not part of."""

    pass


class DroppedUserUnderNoDropoutScheme(ProtocolError):
    """Raised when users dropped but the keys only allow decoding the full sum."""

    pass


class CodecError(ObliviousAggregationError, ValueError):
    """Raised for every malformed frame, message or key file."""

    pass


class BudgetExceededError(ObliviousAggregationError):
    """Raised when an exhaustive enumeration would exceed the state budget.

    Attributes:
        required (int): number of states the enumeration needs.
        budget (int): number of states allowed.
    """

    def __init__(self, required: int, budget: int, message: Optional[str] = None):
        self.required = required
        self.budget = budget
        super().__init__(
            message
            or f"enumeration requires {required} states, budget is {budget} states"
        )
