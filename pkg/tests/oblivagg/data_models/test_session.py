import pytest
from pydantic import ValidationError

from oblivagg.data_models.api import (
    DropPlan,
    FieldSpec,
    FieldVector,
    SchemeEnum,
    SessionOutcome,
    SessionParams,
    SurvivorSet,
)


def test_session_params_accepts_modulus():
    params = SessionParams(n_users=3, spec=5, length=2)
    assert params.spec == FieldSpec(q=5)
    assert params.q == 5
    assert params.scheme == SchemeEnum.NO_DROPOUT
    assert params.broadcast_reply is False
    assert params.users == [1, 2, 3]
    assert params.n_states == 5**12


@pytest.mark.parametrize(
    "n_users, q, length",
    [(1, 5, 1), (0, 5, 1), (2, 4, 1), (2, 5, 0), (2, 1, 1)],
)
def test_session_params_invalid(n_users, q, length):
    with pytest.raises(ValidationError):
        SessionParams(n_users=n_users, spec=q, length=length)


def test_session_params_is_frozen():
    params = SessionParams(n_users=2, spec=3, length=1)
    with pytest.raises(TypeError):
        params.n_users = 3


def test_drop_plan_sorts_and_dedups():
    plan = DropPlan(before_send=(3, 1, 3), after_send=(2,))
    assert plan.before_send == (1, 3)
    assert plan.dropped == (1, 2, 3)
    assert not plan.is_empty()
    assert DropPlan().is_empty()


def test_drop_plan_rejects_double_drop():
    with pytest.raises(ValidationError):
        DropPlan(before_send=(1,), after_send=(1, 2))


def test_session_outcome_recipients():
    outcome = SessionOutcome(
        survivors=SurvivorSet(members=(1, 2, 4)),
        decoded={1: FieldVector.of(5, [3]), 4: FieldVector.of(5, [3])},
        drop_plan=DropPlan(before_send=(3,), after_send=(2,)),
        reply_frames=2,
    )
    assert outcome.recipients == [1, 4]
