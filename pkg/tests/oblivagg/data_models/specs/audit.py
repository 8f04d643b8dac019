import oblivagg.data_models.api as data_models
from tests.oblivagg.data_models.specs.specs import Specs

specs = Specs()

specs.add_valid(
    data_models.AuditEntry,
    lambda: {
        "name": "server-security",
        "anchor": "I(W_1..W_K; X_1..X_K) = 0",
        "verdict": data_models.VerdictEnum.PASS,
        "cells_examined": 16,
        "counterexample": None,
        "detail": "",
    },
)
specs.add_valid(
    data_models.AuditEntry,
    lambda: {
        "name": "server-security",
        "anchor": "I(W_1..W_K; X_1..X_K) = 0",
        "verdict": data_models.VerdictEnum.FAIL,
        "cells_examined": 16,
        "counterexample": {"cell": {"W": [0, 1], "X": [1, 1]}, "lhs": 4, "rhs": 2},
        "detail": "",
    },
)
specs.add_invalid(
    data_models.AuditEntry,
    lambda: {
        "name": "server-security",
        "anchor": "",
        "verdict": data_models.VerdictEnum.FAIL,
        "cells_examined": 16,
    },
)
specs.add_valid(
    data_models.RateTuple,
    lambda: {"l_x": 8, "l_y": 8, "l_z": 16, "l_z_sigma": 32, "length": 8},
)
specs.add_invalid(
    data_models.RateTuple,
    lambda: {"l_x": 8, "l_y": 8, "l_z": 16, "l_z_sigma": 32, "length": 0},
)
