import oblivagg.data_models.api as data_models
from tests.oblivagg.data_models.specs.specs import Specs

specs = Specs()


def vector(*elems):
    return {"spec": {"q": 7}, "elems": tuple(elems)}


specs.add_valid(
    data_models.SourceKey,
    lambda: {"noise": [vector(1, 2), vector(3, 4), vector(5, 6)]},
)
specs.add_valid(
    data_models.NoDropoutUserKey,
    lambda: {"user_id": 2, "own_noise": vector(3, 4), "noise_total": vector(2, 5)},
)
specs.add_valid(
    data_models.DropoutTolerantUserKey,
    lambda: {"user_id": 1, "all_noise": [vector(1, 2), vector(3, 4), vector(5, 6)]},
)
specs.add_valid(
    data_models.SummationUserKey,
    lambda: {"user_id": 3, "mask": vector(6, 0)},
)
specs.add_invalid(
    data_models.SourceKey,
    lambda: {"noise": []},
)
specs.add_invalid(
    data_models.SourceKey,
    lambda: {"noise": [vector(1, 2), vector(3)]},
)
specs.add_invalid(
    data_models.NoDropoutUserKey,
    lambda: {"user_id": 2, "own_noise": vector(3, 4), "noise_total": vector(2)},
)
specs.add_invalid(
    data_models.DropoutTolerantUserKey,
    lambda: {"user_id": 1, "all_noise": [vector(1, 2)]},
)
specs.add_invalid(
    data_models.SummationUserKey,
    lambda: {"user_id": 0, "mask": vector(6, 0)},
)
