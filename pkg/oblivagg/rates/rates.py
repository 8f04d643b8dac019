import logging
from typing import List, Optional, Sequence

import numpy as np
import pandas as pd

import oblivagg.schemes.api as schemes
from oblivagg.data_models.audit import AuditReport
from oblivagg.data_models.enum import RateVerdictEnum, SchemeEnum
from oblivagg.data_models.field import FieldVector
from oblivagg.data_models.messages import PhaseOneMsg, PhaseTwoMsg, SurvivorSet
from oblivagg.data_models.rates import RATE_NAMES, RateReport, RateTuple
from oblivagg.data_models.session import SessionParams
from oblivagg.dealer.keyfile import HEADER_SIZE, encode_key_file
from oblivagg.field.vectors import make_rng, sample_elements
from oblivagg.schemes.scheme import Scheme
from oblivagg.transport.codec import (
    PHASE_ONE_HEADER_SIZE,
    encode_phase_one,
    encode_phase_two,
    phase_two_header_size,
)

logger = logging.getLogger(__name__)


def _symbols(n_bytes: int, params: SessionParams) -> int:
    return n_bytes // params.spec.element_width


def measure_rates(
    params: SessionParams, scheme: Optional[Scheme] = None, seed: int = 0
) -> RateTuple:
    """Counts the symbols a session actually puts on the wire and into key files.

    A session over random inputs is serialized with the wire codec and the key
    file format; headers are stripped and the remaining bytes converted to
    symbols. Keys of different users may differ in size, the largest counts.

    Args:
        params (SessionParams): session parameters.
        scheme (Scheme, optional): scheme to measure instead of the shipped one.
        seed (int, optional): seed of the sampled session.

    Returns:
        RateTuple: symbol counts and L.
    """
    scheme = scheme if scheme is not None else schemes.map(params)
    rng = make_rng(seed)
    shape = (params.n_users, params.length)
    w = sample_elements(params.q, shape, rng)
    noise = sample_elements(params.q, shape, rng)

    source = encode_key_file(params, scheme.source_key(noise))
    l_z_sigma = _symbols(len(source) - HEADER_SIZE, params)
    l_z = 0
    l_x = 0
    x = np.zeros(shape, dtype=np.uint64)
    for k in params.users:
        z = scheme.user_key(noise, k)
        l_z = max(l_z, _symbols(len(encode_key_file(params, z)) - HEADER_SIZE, params))
        x[k - 1] = scheme.phase_one(w[k - 1], z, k)
        msg = PhaseOneMsg(user_id=k, payload=FieldVector.from_numpy(params.spec, x[k - 1]))
        l_x = max(l_x, _symbols(len(encode_phase_one(msg, params)) - PHASE_ONE_HEADER_SIZE, params))

    l_y = 0
    if scheme.has_reply:
        survivors = SurvivorSet(members=tuple(params.users))
        reply = PhaseTwoMsg(
            survivors=survivors,
            payload=FieldVector.from_numpy(params.spec, scheme.reply(x, survivors.members)),
        )
        header = phase_two_header_size(len(survivors))
        l_y = _symbols(len(encode_phase_two(reply, params)) - header, params)
    rates = RateTuple(
        l_x=l_x, l_y=l_y, l_z=l_z, l_z_sigma=l_z_sigma, length=params.length
    )
    logger.debug("measured rates %s for %s K=%d", rates, params.scheme.value, params.n_users)
    return rates


def optimal_region(n_users: int, scheme: SchemeEnum) -> RateTuple:
    """Corner point of the optimal rate region, all rates at their lower bounds.

    Args:
        n_users (int): number of users K >= 2.
        scheme (SchemeEnum): NO_DROPOUT or DROPOUT_TOLERANT.

    Raises:
        ValueError: for K < 2 or a scheme without an oblivious server.

    Returns:
        RateTuple: (1, 1, 2, K) or (1, 1, K, K), with length 1.
    """
    if n_users < 2:
        raise ValueError(f"at least two users are needed, got {n_users}")
    if scheme == SchemeEnum.NO_DROPOUT:
        return RateTuple(l_x=1, l_y=1, l_z=2, l_z_sigma=n_users, length=1)
    if scheme == SchemeEnum.DROPOUT_TOLERANT:
        return RateTuple(l_x=1, l_y=1, l_z=n_users, l_z_sigma=n_users, length=1)
    raise ValueError(f"no optimal region is known for scheme {scheme.value}")


def classify(
    measured: RateTuple, optimal: RateTuple, audit: Optional[AuditReport] = None
) -> RateVerdictEnum:
    """Compares exact rates componentwise.

    Below a bound is impossible for a secure and correct scheme; above a bound
    is suboptimal as long as the supplied audit passes.
    """
    if audit is not None and not audit.passed:
        return RateVerdictEnum.INVALID
    pairs = list(zip(measured.as_fractions(), optimal.as_fractions()))
    if any(m < o for m, o in pairs):
        return RateVerdictEnum.BELOW_BOUND
    if all(m == o for m, o in pairs):
        return RateVerdictEnum.OPTIMAL
    return RateVerdictEnum.SUBOPTIMAL


def verify_optimality(
    params: SessionParams,
    measured: Optional[RateTuple] = None,
    audit: Optional[AuditReport] = None,
    scheme: Optional[Scheme] = None,
) -> RateReport:
    """Checks that the measured rates meet the optimal region with equality.

    Args:
        params (SessionParams): session parameters.
        measured (RateTuple, optional): measured rates, `measure_rates` if omitted.
        audit (AuditReport, optional): audit deciding whether a scheme above the bounds
            is valid.
        scheme (Scheme, optional): scheme to measure instead of the shipped one.

    Returns:
        RateReport: measured and optimal rates with the verdict.
    """
    measured = measured if measured is not None else measure_rates(params, scheme)
    optimal = optimal_region(params.n_users, params.scheme)
    verdict = classify(measured, optimal, audit)
    if verdict != RateVerdictEnum.OPTIMAL:
        logger.warning("rates %s of %s are %s", measured, params.scheme.value, verdict.value)
    return RateReport(params=params, measured=measured, optimal=optimal, verdict=verdict)


def rates_table(reports: Sequence[RateReport]) -> pd.DataFrame:
    """One row per report and rate: measured against optimal, exact."""
    rows: List[dict] = []
    for report in reports:
        for name, m, o in zip(
            RATE_NAMES, report.measured.as_fractions(), report.optimal.as_fractions()
        ):
            rows.append(
                {
                    "scheme": report.params.scheme.value,
                    "K": report.params.n_users,
                    "L": report.params.length,
                    "rate": name,
                    "measured": str(m),
                    "optimal": str(o),
                    "verdict": report.verdict.value,
                }
            )
    return pd.DataFrame(
        rows, columns=["scheme", "K", "L", "rate", "measured", "optimal", "verdict"]
    )
