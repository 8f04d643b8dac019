from typing import Type, Union, get_args, get_origin

from oblivagg.data_models.audit import (  # noqa: F401
    DEFAULT_BUDGET,
    AuditConfig,
    AuditEntry,
    AuditReport,
    CounterExample,
)
from oblivagg.data_models.cli import CliConfig  # noqa: F401
from oblivagg.data_models.enum import (  # noqa: F401
    FrameTypeEnum,
    RateVerdictEnum,
    SchemeEnum,
    ServerPhaseEnum,
    TransportEnum,
    UserPhaseEnum,
    VerdictEnum,
)
from oblivagg.data_models.field import FieldSpec, FieldVector  # noqa: F401
from oblivagg.data_models.keys import (  # noqa: F401
    AnyUserKey,
    DropoutTolerantUserKey,
    NoDropoutUserKey,
    SourceKey,
    SummationUserKey,
    UserKey,
)
from oblivagg.data_models.leakage import LeakageTable, SumPosterior  # noqa: F401
from oblivagg.data_models.messages import (  # noqa: F401
    Frame,
    PhaseOneMsg,
    PhaseTwoMsg,
    SurvivorSet,
)
from oblivagg.data_models.rates import RateReport, RateTuple  # noqa: F401
from oblivagg.data_models.session import SessionParams  # noqa: F401
from oblivagg.data_models.transport import DropPlan, SessionOutcome  # noqa: F401


def to_list(union: Type):
    if get_origin(union) is Union:
        return get_args(union)
    else:
        return [union]


data_model_list = [
    FieldSpec,
    FieldVector,
    SessionParams,
    SourceKey,
    AnyUserKey,
    PhaseOneMsg,
    SurvivorSet,
    PhaseTwoMsg,
    DropPlan,
    SessionOutcome,
    AuditEntry,
    AuditReport,
    RateTuple,
    RateReport,
    LeakageTable,
]

AnyThing = [model for models in data_model_list for model in to_list(models)]
