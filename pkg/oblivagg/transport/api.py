from oblivagg.transport.channel import (  # noqa: F401
    Channel,
    SimulatedChannel,
    StreamChannel,
    make_channel,
)
from oblivagg.transport.codec import (  # noqa: F401
    FRAME_TAGS,
    PROTOCOL_VERSION,
    SCHEME_CODES,
    decode_frame,
    decode_hello,
    decode_phase_one,
    decode_phase_two,
    encode_frame,
    encode_hello,
    encode_phase_one,
    encode_phase_two,
    read_frame,
)
from oblivagg.transport.harness import (  # noqa: F401
    expected_sum,
    mismatches,
    random_drop_plan,
    run_trials,
)
from oblivagg.transport.network import run_session  # noqa: F401
