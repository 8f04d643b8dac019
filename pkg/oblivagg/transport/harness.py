import logging
from typing import Dict, List, Sequence

import numpy as np
import pandas as pd
from multiprocess.pool import Pool
from tqdm import tqdm

import oblivagg.schemes.api as schemes
from oblivagg.data_models.field import FieldVector
from oblivagg.data_models.session import SessionParams
from oblivagg.data_models.transport import DropPlan, SessionOutcome
from oblivagg.field.vectors import make_rng, sample_uniform, sum_vectors
from oblivagg.transport.network import run_session

logger = logging.getLogger(__name__)

TRIAL_COLUMNS = ["trial", "seed", "survivors", "recipients", "mismatches"]


def expected_sum(inputs: Sequence[FieldVector], survivors: Sequence[int]) -> FieldVector:
    """Direct recomputation of the survivors' input sum."""
    return sum_vectors([inputs[k - 1] for k in survivors])


def mismatches(outcome: SessionOutcome, inputs: Sequence[FieldVector]) -> List[int]:
    """Recipients whose decoded value differs from the recomputed sum, or that failed."""
    target = expected_sum(inputs, outcome.survivors.members)
    bad = [k for k, v in outcome.decoded.items() if v != target]
    missing = [k for k in outcome.recipients if k not in outcome.decoded]
    return sorted(set(bad + missing))


def random_drop_plan(
    params: SessionParams,
    rng: np.random.Generator,
    p_before: float = 0.25,
    p_after: float = 0.1,
) -> DropPlan:
    """Random drops for a dropout-tolerant session; at least one user sends.

    Sessions whose scheme does not tolerate dropouts get an empty plan.
    """
    if not schemes.map(params).tolerates_dropouts:
        return DropPlan()
    draws = rng.random(params.n_users)
    before = [k for k in params.users if draws[k - 1] < p_before]
    if len(before) == params.n_users:
        before.remove(int(rng.choice(before)))
    after = [
        k for k in params.users if k not in before and draws[k - 1] < p_before + p_after
    ]
    return DropPlan(before_send=tuple(before), after_send=tuple(after))


def _trial_seed(seed: int, trial_idx: int) -> int:
    return int(np.random.SeedSequence([seed, trial_idx]).generate_state(1)[0])


def _single_trial(
    trial_idx: int,
    params: SessionParams,
    seed: int,
    shuffle: bool,
) -> Dict:
    trial_seed = _trial_seed(seed, trial_idx)
    rng = make_rng(trial_seed)
    inputs = [sample_uniform(params.spec, params.length, rng) for _ in params.users]
    drop_plan = random_drop_plan(params, rng)
    outcome = run_session(
        params, inputs, drop_plan=drop_plan, seed=trial_seed, shuffle=shuffle
    )
    bad = mismatches(outcome, inputs)
    return {
        "trial": trial_idx,
        "seed": trial_seed,
        "survivors": str(outcome.survivors),
        "recipients": len(outcome.recipients),
        "mismatches": len(bad),
    }


def run_trials(
    params: SessionParams,
    n_trials: int,
    seed: int = 0,
    shuffle: bool = False,
    n_procs: int = 1,
    progress: bool = False,
) -> pd.DataFrame:
    """Runs seeded sessions with random inputs and drops against the recomputation oracle.

    Args:
        params (SessionParams): session parameters.
        n_trials (int): number of sessions.
        seed (int, optional): master seed, every trial derives its own.
        shuffle (bool, optional): shuffle phase-one delivery.
        n_procs (int, optional): number of parallel processes.
        progress (bool, optional): show a progress bar.

    Raises:
        ValueError: if `n_trials` is negative.

    Returns:
        pd.DataFrame: one row per trial, with the number of mismatching recipients.
    """

    def make_args(trial_idx: int):
        return (trial_idx, params, seed, shuffle)

    if n_trials < 0:
        raise ValueError(f"number of trials must be nonnegative, got {n_trials}")
    if n_procs == 1 or n_trials == 0:
        rows = [
            _single_trial(*make_args(i))
            for i in tqdm(range(n_trials), disable=not progress)
        ]
    else:
        with Pool(min(n_procs, n_trials)) as p:
            results = [p.apply_async(_single_trial, make_args(i)) for i in range(n_trials)]
            rows = [r.get() for r in tqdm(results, disable=not progress)]
    df = pd.DataFrame(rows, columns=TRIAL_COLUMNS)
    n_bad = int(df["mismatches"].sum()) if len(df) > 0 else 0
    if n_bad > 0:
        logger.error("%d of %d trials produced mismatching sums", n_bad, n_trials)
    return df

