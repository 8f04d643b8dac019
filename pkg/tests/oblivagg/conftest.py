from pytest import fixture

import tests.oblivagg.data_models.specs.api as specs
from oblivagg.data_models.api import SchemeEnum, SessionParams

ALL_SPECS = [specs.field, specs.session, specs.keys, specs.messages, specs.audit]


@fixture(params=[s for group in ALL_SPECS for s in group.valids])
def valid_spec(request) -> specs.Spec:
    return request.param


@fixture(params=[s for group in ALL_SPECS for s in group.invalids])
def invalid_spec(request) -> specs.Spec:
    return request.param


@fixture(params=specs.keys.valids)
def key_spec(request) -> specs.Spec:
    return request.param


@fixture(params=[SchemeEnum.NO_DROPOUT, SchemeEnum.DROPOUT_TOLERANT])
def scheme(request) -> SchemeEnum:
    return request.param


@fixture
def params_k3_q5(scheme) -> SessionParams:
    return SessionParams(n_users=3, spec=5, length=2, scheme=scheme)
