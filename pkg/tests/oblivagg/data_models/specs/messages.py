import oblivagg.data_models.api as data_models
from tests.oblivagg.data_models.specs.specs import Specs

specs = Specs()

specs.add_valid(
    data_models.PhaseOneMsg,
    lambda: {"user_id": 7, "payload": {"spec": {"q": 257}, "elems": (255, 256)}},
)
specs.add_valid(
    data_models.SurvivorSet,
    lambda: {"members": (1, 3)},
)
specs.add_valid(
    data_models.PhaseTwoMsg,
    lambda: {
        "survivors": {"members": (1, 3)},
        "payload": {"spec": {"q": 5}, "elems": (0,)},
    },
)
specs.add_invalid(
    data_models.PhaseOneMsg,
    lambda: {"user_id": 0, "payload": {"spec": {"q": 5}, "elems": (1,)}},
)
specs.add_invalid(data_models.SurvivorSet, lambda: {"members": ()})
specs.add_invalid(data_models.SurvivorSet, lambda: {"members": (1, 1)})
specs.add_invalid(data_models.SurvivorSet, lambda: {"members": (0, 2)})
