import oblivagg.data_models.api as data_models
from tests.oblivagg.data_models.specs.specs import Specs

specs = Specs(overwrites={"n_users": [0, 1], "length": [0], "spec": [{"q": 9}]})

specs.add_valid(
    data_models.SessionParams,
    lambda: {
        "n_users": 3,
        "spec": {"q": 5},
        "length": 2,
        "scheme": data_models.SchemeEnum.NO_DROPOUT,
        "broadcast_reply": False,
    },
)
specs.add_valid(
    data_models.SessionParams,
    lambda: {
        "n_users": 2,
        "spec": {"q": 2},
        "length": 1,
        "scheme": data_models.SchemeEnum.DROPOUT_TOLERANT,
        "broadcast_reply": True,
    },
)
specs.add_valid(
    data_models.DropPlan,
    lambda: {"before_send": (2,), "after_send": (1, 4)},
)
specs.add_invalid(
    data_models.DropPlan,
    lambda: {"before_send": (2,), "after_send": (2,)},
)
specs.add_invalid(
    data_models.DropPlan,
    lambda: {"before_send": (0,), "after_send": ()},
)
