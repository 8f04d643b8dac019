from oblivagg.auditor.census import (  # noqa: F401
    JointCensus,
    StateView,
    check_budget,
    decode_states,
    take_census,
)
from oblivagg.auditor.checks import (  # noqa: F401
    check_collusion_nodropout,
    check_dropout_collusion_recovery,
    check_entropy_identities,
    check_server_security,
    check_user_security,
    default_survivor_sets,
    run_audit,
)
from oblivagg.auditor.independence import (  # noqa: F401
    check_independence,
    check_recovery,
    check_uniformity,
)
from oblivagg.auditor.leakage import (  # noqa: F401
    PRESETS,
    leakage_frame,
    preset_leakage,
    sum_leakage,
)
