from fractions import Fraction

import pytest

from oblivagg.auditor.api import run_audit
from oblivagg.data_models.api import (
    RateTuple,
    RateVerdictEnum,
    SchemeEnum,
    SessionParams,
)
from oblivagg.rates.api import (
    classify,
    measure_rates,
    optimal_region,
    rates_table,
    verify_optimality,
)
from tests.oblivagg.auditor.dummy import NoiseReuseScheme, PaddedKeyScheme

ND = SchemeEnum.NO_DROPOUT
DT = SchemeEnum.DROPOUT_TOLERANT


@pytest.mark.parametrize(
    "scheme, expected",
    [
        (ND, (1, 1, 2, 4)),
        (DT, (1, 1, 4, 4)),
    ],
)
def test_measured_rates(scheme, expected):
    params = SessionParams(n_users=4, spec=257, length=8, scheme=scheme)
    measured = measure_rates(params)
    assert measured.length == 8
    assert measured.as_fractions() == tuple(Fraction(r) for r in expected)


def test_rates_of_fixture_params(params_k3_q5):
    measured = measure_rates(params_k3_q5)
    assert measured.r_x == measured.r_y == 1
    assert measured.r_z_sigma == 3


@pytest.mark.parametrize("scheme", [ND, DT])
@pytest.mark.parametrize("n_users", range(2, 9))
@pytest.mark.parametrize("q, length", [(2, 1), (97, 3), (9223372036854775783, 16)])
def test_shipped_schemes_are_optimal(scheme, n_users, q, length):
    params = SessionParams(n_users=n_users, spec=q, length=length, scheme=scheme)
    report = verify_optimality(params)
    assert report.verdict == RateVerdictEnum.OPTIMAL
    assert report.is_optimal
    assert report.measured.as_fractions() == report.optimal.as_fractions()


def test_optimal_region():
    assert optimal_region(2, ND) == RateTuple(l_x=1, l_y=1, l_z=2, l_z_sigma=2, length=1)
    assert optimal_region(5, DT).as_fractions() == (1, 1, 5, 5)
    with pytest.raises(ValueError):
        optimal_region(1, ND)
    with pytest.raises(ValueError):
        optimal_region(3, SchemeEnum.SUMMATION)


def test_padded_keys_are_suboptimal():
    params = SessionParams(n_users=2, spec=3, length=1)
    scheme = PaddedKeyScheme(params)
    audit = run_audit(params, scheme=scheme)
    report = verify_optimality(params, audit=audit, scheme=scheme)
    assert report.measured.l_z == 3
    assert report.verdict == RateVerdictEnum.SUBOPTIMAL


def test_failed_audit_invalidates_rates():
    params = SessionParams(n_users=2, spec=2, length=1)
    scheme = NoiseReuseScheme(params)
    report = verify_optimality(params, audit=run_audit(params, scheme=scheme), scheme=scheme)
    assert report.verdict == RateVerdictEnum.INVALID


def test_tampered_measurement_is_below_bound():
    params = SessionParams(n_users=3, spec=5, length=4)
    honest = measure_rates(params)
    tampered = honest.copy(update={"l_y": 3})
    assert verify_optimality(params, measured=tampered).verdict == RateVerdictEnum.BELOW_BOUND


def test_classify():
    optimal = optimal_region(3, ND)
    assert classify(RateTuple(l_x=2, l_y=2, l_z=4, l_z_sigma=6, length=2), optimal) == (
        RateVerdictEnum.OPTIMAL
    )
    assert classify(RateTuple(l_x=2, l_y=2, l_z=5, l_z_sigma=6, length=2), optimal) == (
        RateVerdictEnum.SUBOPTIMAL
    )
    assert classify(RateTuple(l_x=1, l_y=2, l_z=4, l_z_sigma=6, length=2), optimal) == (
        RateVerdictEnum.BELOW_BOUND
    )


def test_rates_table():
    reports = [
        verify_optimality(SessionParams(n_users=3, spec=5, length=2, scheme=s)) for s in (ND, DT)
    ]
    df = rates_table(reports)
    assert list(df.columns) == ["scheme", "K", "L", "rate", "measured", "optimal", "verdict"]
    assert len(df) == 8
    assert df[df["rate"] == "R_Z"]["measured"].tolist() == ["2", "3"]
    assert set(df["verdict"]) == {RateVerdictEnum.OPTIMAL.value}
