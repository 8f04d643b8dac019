from oblivagg.protocol.recovery import (  # noqa: F401
    forward_subset_sums,
    recovery_survivor_sets,
    reconstruct_inputs,
)
from oblivagg.protocol.server import ServerState, server_close_and_reply  # noqa: F401
from oblivagg.protocol.user import UserState, user_decode, user_phase_one  # noqa: F401
