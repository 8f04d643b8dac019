"""Exhaustive enumeration of the joint input/noise space.

A state is a point (W_1..W_K, N_1..N_K) of F_q^(2KL); every state is equally
likely. States are indexed by integers in [0, q^(2KL)), the base-q digits of
an index being the inputs followed by the noise.
"""
import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from multiprocess.pool import Pool
from tqdm import tqdm

from oblivagg.data_models.audit import AuditConfig
from oblivagg.data_models.session import SessionParams
from oblivagg.errors import BudgetExceededError
from oblivagg.field.arithmetic import mod_sum
from oblivagg.schemes.scheme import Scheme

logger = logging.getLogger(__name__)

COUNT = "count"
MAX_STATES = 2**62


def check_budget(params: SessionParams, budget: int) -> int:
    """Returns q^(2KL) or refuses before anything is allocated.

    Raises:
        BudgetExceededError: if the state space exceeds the budget.
    """
    required = params.n_states
    if required > budget or required > MAX_STATES:
        raise BudgetExceededError(required=required, budget=budget)
    return required


class StateView:
    """Inputs, noise and everything the scheme derives from them for a block of states.

    Attributes:
        scheme (Scheme): the audited scheme.
        w (np.ndarray): inputs, shape (n, K, L).
        noise (np.ndarray): noise, shape (n, K, L).
    """

    def __init__(self, scheme: Scheme, w: np.ndarray, noise: np.ndarray):
        self.scheme = scheme
        self.w = w
        self.noise = noise
        self._keys: Dict[int, np.ndarray] = {}
        self._x: Optional[np.ndarray] = None

    def __len__(self) -> int:
        return self.w.shape[0]

    def key(self, k: int) -> np.ndarray:
        if k not in self._keys:
            self._keys[k] = self.scheme.user_key(self.noise, k)
        return self._keys[k]

    @property
    def x(self) -> np.ndarray:
        """Phase-one messages, shape (n, K, L)."""
        if self._x is None:
            self._x = np.stack(
                [
                    self.scheme.phase_one(self.w[:, k - 1, :], self.key(k), k)
                    for k in range(1, self.scheme.n_users + 1)
                ],
                axis=-2,
            )
        return self._x

    def reply(self, survivors: Sequence[int]) -> np.ndarray:
        return self.scheme.reply(self.x, survivors)

    def input_sum(self, users: Sequence[int]) -> np.ndarray:
        idx = [u - 1 for u in users]
        return mod_sum(self.w[:, idx, :], self.scheme.q, axis=-2)


Observable = Callable[[StateView], np.ndarray]


def decode_states(
    params: SessionParams, start: int, stop: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Inputs and noise of the states with index in [start, stop)."""
    k, length, q = params.n_users, params.length, params.q
    n_digits = 2 * k * length
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((len(idx), n_digits), dtype=np.uint64)
    for d in reversed(range(n_digits)):
        digits[:, d] = (idx % q).astype(np.uint64)
        idx = idx // q
    half = k * length
    return (
        digits[:, :half].reshape(-1, k, length),
        digits[:, half:].reshape(-1, k, length),
    )


def column_names(name: str, width: int) -> List[str]:
    return [f"{name}[{i}]" for i in range(width)]


def _observe(view: StateView, observables: Dict[str, Observable]) -> pd.DataFrame:
    blocks = {}
    for name, observable in observables.items():
        values = np.asarray(observable(view)).reshape(len(view), -1)
        for col, column in zip(column_names(name, values.shape[1]), values.T):
            blocks[col] = column
    return pd.DataFrame(blocks)


def _census_chunk(
    scheme: Scheme, observables: Dict[str, Observable], start: int, stop: int
) -> pd.DataFrame:
    w, noise = decode_states(scheme.params, start, stop)
    df = _observe(StateView(scheme, w, noise), observables)
    return df.groupby(list(df.columns), as_index=False).size().rename(
        columns={"size": COUNT}
    )


class JointCensus:
    """Exact occurrence counts of a tuple of observables over all states.

    Attributes:
        columns (Dict[str, List[str]]): census columns per observable.
        counts (pd.DataFrame): one row per observed value tuple with its count.
        total (int): number of enumerated states.
    """

    def __init__(self, columns: Dict[str, List[str]], counts: pd.DataFrame, total: int):
        if int(counts[COUNT].sum()) != total:
            raise ValueError(
                f"census counts add up to {int(counts[COUNT].sum())}, expected {total}"
            )
        self.columns = columns
        self.counts = counts
        self.total = total

    def cols(self, names: Sequence[str]) -> List[str]:
        return [c for name in names for c in self.columns[name]]

    def marginal(self, names: Sequence[str]) -> pd.DataFrame:
        cols = self.cols(names)
        if len(cols) == 0:
            return pd.DataFrame({COUNT: [self.total]})
        return self.counts.groupby(cols, as_index=False)[COUNT].sum()

    def cell(self, row: pd.Series, names: Sequence[str]) -> Dict[str, List[int]]:
        """The observable values of a census row, keyed by observable."""
        return {name: [int(row[c]) for c in self.columns[name]] for name in names}

    def to_dict(self, names: Optional[Sequence[str]] = None) -> Dict[Tuple[int, ...], int]:
        """Map from observed value tuple to count."""
        names = list(self.columns) if names is None else names
        marginal = self.marginal(names)
        cols = self.cols(names)
        return {
            tuple(int(v) for v in row[cols]): int(row[COUNT])
            for _, row in marginal.iterrows()
        }


def take_census(
    scheme: Scheme,
    observables: Dict[str, Observable],
    config: Optional[AuditConfig] = None,
) -> JointCensus:
    """Counts every observed value tuple over the full state space.

    The space is cut into chunks that are counted independently, in parallel
    if requested, and merged by addition.

    Args:
        scheme (Scheme): the audited scheme, bound to its session parameters.
        observables (Dict[str, Observable]): named functions of a block of states.
        config (AuditConfig, optional): budget, chunk size and parallelism.

    Raises:
        BudgetExceededError: if q^(2KL) exceeds the budget.

    Returns:
        JointCensus: the census.
    """
    config = config if config is not None else AuditConfig()
    total = check_budget(scheme.params, config.budget)
    bounds = [
        (start, min(start + config.chunk_size, total))
        for start in range(0, total, config.chunk_size)
    ]
    logger.debug(
        "census of %s over %d states in %d chunks", list(observables), total, len(bounds)
    )
    if config.n_procs == 1:
        parts = [
            _census_chunk(scheme, observables, start, stop)
            for start, stop in tqdm(bounds, disable=not config.progress)
        ]
    else:
        with Pool(min(config.n_procs, len(bounds))) as p:
            results = [
                p.apply_async(_census_chunk, (scheme, observables, start, stop))
                for start, stop in bounds
            ]
            parts = [r.get() for r in tqdm(results, disable=not config.progress)]
    merged = pd.concat(parts, ignore_index=True)
    value_cols = [c for c in merged.columns if c != COUNT]
    counts = merged.groupby(value_cols, as_index=False)[COUNT].sum()
    columns: Dict[str, List[str]] = {}
    for name in observables:
        columns[name] = [c for c in value_cols if c.startswith(f"{name}[")]
    return JointCensus(columns=columns, counts=counts, total=total)
