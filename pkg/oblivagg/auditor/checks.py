import itertools
import logging
import warnings
from typing import Dict, List, Optional, Sequence

import oblivagg.schemes.api as schemes
from oblivagg.auditor.census import Observable, StateView, check_budget, take_census
from oblivagg.auditor.independence import (
    check_independence,
    check_recovery,
    check_uniformity,
)
from oblivagg.data_models.audit import AuditConfig, AuditEntry, AuditReport
from oblivagg.data_models.enum import SchemeEnum
from oblivagg.data_models.messages import SurvivorSet
from oblivagg.data_models.session import SessionParams
from oblivagg.errors import (
    DroppedUserUnderNoDropoutScheme,
    NotASurvivorError,
    ProtocolError,
    UnknownUserError,
)
from oblivagg.protocol.recovery import recovery_survivor_sets
from oblivagg.schemes.scheme import Scheme

logger = logging.getLogger(__name__)


def _resolve(params: SessionParams, scheme: Optional[Scheme]) -> Scheme:
    if scheme is None:
        return schemes.map(params)
    if scheme.params != params:
        raise ValueError("scheme is bound to different session parameters")
    return scheme


def _inputs(users: Sequence[int]) -> Observable:
    idx = [u - 1 for u in users]
    return lambda view: view.w[:, idx, :]


def _key(k: int) -> Observable:
    return lambda view: view.key(k)


def _messages(view: StateView):
    return view.x


def _reply(survivors: Sequence[int]) -> Observable:
    return lambda view: view.reply(survivors)


def _message(k: int) -> Observable:
    return lambda view: view.x[:, k - 1, :]


def _input_sum(users: Sequence[int]) -> Observable:
    return lambda view: view.input_sum(users)


def _fmt(users: Sequence[int]) -> str:
    return "{" + ",".join(str(u) for u in users) + "}"


def check_server_security(
    params: SessionParams,
    config: Optional[AuditConfig] = None,
    scheme: Optional[Scheme] = None,
) -> AuditEntry:
    """The server's view (X_1..X_K) is independent of the inputs (W_1..W_K).

    Args:
        params (SessionParams): audited parameters.
        config (AuditConfig, optional): budget and parallelism.
        scheme (Scheme, optional): scheme to audit instead of the shipped one.

    Raises:
        BudgetExceededError: if q^(2KL) exceeds the budget.

    Returns:
        AuditEntry: the verdict.
    """
    scheme = _resolve(params, scheme)
    census = take_census(
        scheme, {"W": _inputs(params.users), "X": _messages}, config
    )
    return check_independence(
        census, ["W"], ["X"], name="server-security", anchor="I(W_1..W_K; X_1..X_K) = 0"
    )


def check_user_security(
    params: SessionParams,
    k: int,
    survivors: Optional[SurvivorSet] = None,
    config: Optional[AuditConfig] = None,
    scheme: Optional[Scheme] = None,
) -> AuditEntry:
    """The reply reveals nothing to user k beyond the survivors' input sum.

    Within every cell fixing (sum over U of W_u, W_k, Z_k) all inputs and the
    reply Y^U must be independent.

    Args:
        params (SessionParams): audited parameters.
        k (int): the curious user.
        survivors (SurvivorSet, optional): U, all users if omitted.
        config (AuditConfig, optional): budget and parallelism.
        scheme (Scheme, optional): scheme to audit instead of the shipped one.

    Raises:
        NotASurvivorError: if k is not in U.
        DroppedUserUnderNoDropoutScheme: if U is not [K] for a scheme without dropouts.
        BudgetExceededError: if q^(2KL) exceeds the budget.

    Returns:
        AuditEntry: the verdict.
    """
    scheme = _resolve(params, scheme)
    survivors = survivors if survivors is not None else SurvivorSet(members=tuple(params.users))
    if not survivors.fits(params.n_users):
        raise UnknownUserError(f"survivor set {survivors} exceeds [1, {params.n_users}]")
    if k not in survivors:
        raise NotASurvivorError(f"user {k} is not in the survivor set {survivors}")
    if not scheme.has_reply:
        raise ProtocolError(f"scheme {params.scheme.value} has no reply to audit")
    if not scheme.tolerates_dropouts and not survivors.is_complete(params.n_users):
        raise DroppedUserUnderNoDropoutScheme(
            f"{params.scheme.value} keys cannot serve the survivor set {survivors}"
        )
    members = survivors.members
    census = take_census(
        scheme,
        {
            "W": _inputs(params.users),
            "Y": _reply(members),
            "S": _input_sum(members),
            "Wk": _inputs([k]),
            "Zk": _key(k),
        },
        config,
    )
    return check_independence(
        census,
        ["W"],
        ["Y"],
        ["S", "Wk", "Zk"],
        name=f"user-security[k={k},U={survivors}]",
        anchor=f"I(W_1..W_K; Y^U | sum_U W, W_{k}, Z_{k}) = 0",
    )


def check_entropy_identities(
    params: SessionParams,
    config: Optional[AuditConfig] = None,
    scheme: Optional[Scheme] = None,
) -> List[AuditEntry]:
    """Entropy identities every secure scheme meets, as uniform-count conditions.

    - X_u is uniform on q^L values given Z_u and the other users' inputs and keys,
      for every u;
    - X_1 is uniform on at least q^L values given Z_1;
    - (X_1..X_K) is uniform on at least q^(KL) values.

    Args:
        params (SessionParams): audited parameters.
        config (AuditConfig, optional): budget and parallelism.
        scheme (Scheme, optional): scheme to audit instead of the shipped one.

    Raises:
        BudgetExceededError: if q^(2KL) exceeds the budget.

    Returns:
        List[AuditEntry]: K + 2 entries.
    """
    scheme = _resolve(params, scheme)
    q, n_users, length = params.q, params.n_users, params.length
    observables: Dict[str, Observable] = {"X": _messages}
    for u in params.users:
        observables[f"X{u}"] = _message(u)
        observables[f"W{u}"] = _inputs([u])
        observables[f"Z{u}"] = _key(u)
    census = take_census(scheme, observables, config)
    entries = []
    for u in params.users:
        others = [v for v in params.users if v != u]
        given = [f"Z{u}"] + [n for v in others for n in (f"W{v}", f"Z{v}")]
        entries.append(
            check_uniformity(
                census,
                [f"X{u}"],
                given,
                support=q**length,
                name=f"uplink-entropy[u={u}]",
                anchor=f"H(X_{u} | Z_{u}, (W_k, Z_k)_(k!={u})) = L",
            )
        )
    entries.append(
        check_uniformity(
            census,
            ["X1"],
            ["Z1"],
            support=q**length,
            name="uplink-entropy-given-key",
            anchor="H(X_1 | Z_1) >= L",
            at_least=True,
        )
    )
    entries.append(
        check_uniformity(
            census,
            ["X"],
            [],
            support=q ** (n_users * length),
            name="joint-uplink-entropy",
            anchor="H(X_1..X_K) >= KL",
            at_least=True,
        )
    )
    return entries


def _check_colluders(params: SessionParams, colluders: Sequence[int]) -> List[int]:
    members = sorted(set(colluders))
    if len(members) == 0 or len(members) >= params.n_users:
        raise ValueError(f"colluders {_fmt(members)} must form a nonempty proper subset of [K]")
    if members[0] < 1 or members[-1] > params.n_users:
        raise UnknownUserError(f"colluders {_fmt(members)} are not in [1, {params.n_users}]")
    return members


def check_collusion_nodropout(
    params: SessionParams,
    colluders: Sequence[int],
    config: Optional[AuditConfig] = None,
    scheme: Optional[Scheme] = None,
) -> AuditEntry:
    """Colluding users and the server learn nothing about the others beyond the sum.

    The inputs of the honest users must be independent of every message and the
    colluders' inputs and keys, given the sum over all users.

    Args:
        params (SessionParams): audited parameters of a no-dropout session.
        colluders (Sequence[int]): the coalition C, a nonempty proper subset of [K].
        config (AuditConfig, optional): budget and parallelism.
        scheme (Scheme, optional): scheme to audit instead of the shipped one.

    Raises:
        ProtocolError: if the scheme tolerates dropouts, see `check_dropout_collusion_recovery`.
        BudgetExceededError: if q^(2KL) exceeds the budget.

    Returns:
        AuditEntry: the verdict; PASS_DEGENERATE if the sum and the colluders'
            inputs determine the honest inputs.
    """
    scheme = _resolve(params, scheme)
    if scheme.tolerates_dropouts or not scheme.has_reply:
        raise ProtocolError(
            f"collusion resistance only holds for the {SchemeEnum.NO_DROPOUT.value} scheme"
        )
    members = _check_colluders(params, colluders)
    honest = [k for k in params.users if k not in members]
    observables: Dict[str, Observable] = {
        "W_honest": _inputs(honest),
        "X": _messages,
        "Y": _reply(params.users),
        "S": _input_sum(params.users),
        "W_C": _inputs(members),
    }
    for c in members:
        observables[f"Z{c}"] = _key(c)
    census = take_census(scheme, observables, config)
    return check_independence(
        census,
        ["W_honest"],
        ["X", "Y"],
        ["S", "W_C"] + [f"Z{c}" for c in members],
        name=f"collusion[C={_fmt(members)}]",
        anchor="I(W_(k not in C); X, Y, (W_c, Z_c)_(c in C) | sum W) = 0",
    )


def check_dropout_collusion_recovery(
    params: SessionParams,
    colluder: int = 1,
    config: Optional[AuditConfig] = None,
    scheme: Optional[Scheme] = None,
) -> AuditEntry:
    """Shows that one dropout-tolerant user colluding with the server recovers every input.

    The server replies over the survivor sets of `recovery_survivor_sets`; the
    colluder's input, key and these replies determine all K inputs. A
    successful recovery is reported as FAIL.

    Args:
        params (SessionParams): audited parameters of a dropout-tolerant session.
        colluder (int, optional): the colluding user.
        config (AuditConfig, optional): budget and parallelism.
        scheme (Scheme, optional): scheme to audit instead of the shipped one.

    Raises:
        ProtocolError: if the scheme does not tolerate dropouts.
        BudgetExceededError: if q^(2KL) exceeds the budget.

    Returns:
        AuditEntry: FAIL with a recovered cell if the inputs leak completely.
    """
    scheme = _resolve(params, scheme)
    if not scheme.tolerates_dropouts:
        raise ProtocolError(f"scheme {params.scheme.value} serves a single survivor set")
    if colluder < 1 or colluder > params.n_users:
        raise UnknownUserError(f"colluder {colluder} is not in [1, {params.n_users}]")
    observables: Dict[str, Observable] = {
        "W": _inputs(params.users),
        "Wc": _inputs([colluder]),
        "Zc": _key(colluder),
    }
    replies = []
    for i, survivors in enumerate(recovery_survivor_sets(params.n_users, anchor=colluder)):
        observables[f"Y{i}"] = _reply(survivors.members)
        replies.append(f"Y{i}")
    census = take_census(scheme, observables, config)
    return check_recovery(
        census,
        ["W"],
        ["Wc", "Zc"] + replies,
        name=f"dropout-collusion-recovery[c={colluder}]",
        anchor=f"H(W_1..W_K | W_{colluder}, Z_{colluder}, replies) = 0",
    )


def default_survivor_sets(params: SessionParams) -> List[SurvivorSet]:
    """[K] for the no-dropout scheme, every nonempty subset of [K] otherwise."""
    if params.scheme != SchemeEnum.DROPOUT_TOLERANT:
        return [SurvivorSet(members=tuple(params.users))]
    return [
        SurvivorSet(members=members)
        for size in range(1, params.n_users + 1)
        for members in itertools.combinations(params.users, size)
    ]


def run_audit(
    params: SessionParams,
    config: Optional[AuditConfig] = None,
    scheme: Optional[Scheme] = None,
) -> AuditReport:
    """Runs every applicable check for a session configuration.

    Args:
        params (SessionParams): audited parameters.
        config (AuditConfig, optional): budget, parallelism, survivor sets, users and
            colluder sets.
        scheme (Scheme, optional): scheme to audit instead of the shipped one.

    Raises:
        BudgetExceededError: before any enumeration if q^(2KL) exceeds the budget.

    Returns:
        AuditReport: one entry per constraint.
    """
    config = config if config is not None else AuditConfig()
    scheme = _resolve(params, scheme)
    check_budget(params, config.budget)
    entries = [check_server_security(params, config, scheme)]
    if scheme.has_reply:
        survivor_sets = (
            config.survivor_sets
            if config.survivor_sets is not None
            else default_survivor_sets(params)
        )
        for survivors in survivor_sets:
            for k in survivors.members:
                if config.users is not None and k not in config.users:
                    continue
                entries.append(check_user_security(params, k, survivors, config, scheme))
    entries += check_entropy_identities(params, config, scheme)
    for colluders in config.colluder_sets:
        if scheme.tolerates_dropouts:
            warnings.warn(
                "the dropout-tolerant scheme is not collusion resistant, "
                "auditing the recovery attack instead"
            )
            entries.append(
                check_dropout_collusion_recovery(params, min(colluders), config, scheme)
            )
        elif scheme.has_reply:
            entries.append(check_collusion_nodropout(params, colluders, config, scheme))
        else:
            warnings.warn(f"no collusion check for the {params.scheme.value} scheme")
    report = AuditReport(params=params, entries=entries)
    logger.info(
        "audit of %s finished with %d of %d entries failing",
        params.scheme.value,
        len(report.failures),
        len(report.entries),
    )
    return report
