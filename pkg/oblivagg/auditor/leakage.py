import itertools
import logging
from typing import Dict, List, Sequence, Tuple

import pandas as pd

from oblivagg.data_models.field import FieldSpec
from oblivagg.data_models.leakage import LeakageTable, SumPosterior

logger = logging.getLogger(__name__)

PRESETS: Dict[str, Tuple[int, List[List[int]]]] = {
    "three-user": (1009, [[0, 1, 2], [0, 10, 20], [0, 100, 200]]),
    "binary-f3": (3, [[0, 1], [0, 1]]),
}


def sum_leakage(alphabets: Sequence[Sequence[int]], q: int) -> LeakageTable:
    """Exact posterior of the inputs given their sum modulo q.

    Inputs are independent and uniform over their alphabets; a value listed
    twice is twice as likely.

    Args:
        alphabets (Sequence[Sequence[int]]): per user, the values its input takes.
        q (int): prime modulus of the sum.

    Raises:
        ValueError: for fewer than two users, an empty alphabet or a value that is
            not a residue modulo q.

    Returns:
        LeakageTable: one posterior per achievable sum value.
    """
    if len(alphabets) < 2:
        raise ValueError(f"leakage needs at least two users, got {len(alphabets)}")
    if any(len(a) == 0 for a in alphabets):
        raise ValueError("every user needs a nonempty input alphabet")
    spec = FieldSpec(q=q)
    cols = [f"W{k}" for k in range(1, len(alphabets) + 1)]
    df = pd.DataFrame(list(itertools.product(*alphabets)), columns=cols, dtype=object)
    df["sum"] = [sum(outcome) % q for outcome in df[cols].itertuples(index=False)]
    counts = df.groupby(["sum"] + cols).size()
    posteriors = []
    for sum_value, group in counts.groupby(level="sum"):
        outcomes = [tuple(int(v) for v in idx[1:]) for idx in group.index]
        posteriors.append(
            SumPosterior(
                sum_value=int(sum_value),
                outcomes=outcomes,
                counts=[int(c) for c in group.values],
            )
        )
    table = LeakageTable(
        spec=spec, alphabets=[list(a) for a in alphabets], posteriors=posteriors
    )
    logger.debug(
        "%d of %d sum values determine the inputs",
        len(table.deterministic_sums),
        len(table.posteriors),
    )
    return table


def preset_leakage(name: str) -> LeakageTable:
    if name not in PRESETS:
        raise ValueError(f"unknown leakage preset {name}, choose from {sorted(PRESETS)}")
    q, alphabets = PRESETS[name]
    return sum_leakage(alphabets, q)


def leakage_frame(table: LeakageTable) -> pd.DataFrame:
    """Posterior table as rows of (sum, inputs, probability)."""
    records = [
        {
            "sum": p.sum_value,
            "inputs": outcome,
            "probability": str(prob),
            "certain": p.deterministic,
        }
        for p in table.posteriors
        for outcome, prob in zip(p.outcomes, p.probabilities)
    ]
    return pd.DataFrame(records, columns=["sum", "inputs", "probability", "certain"])
