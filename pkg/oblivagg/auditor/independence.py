"""Exact integer tests on a joint census.

No probabilities are formed. Conditional independence of A and B given C
holds iff count(a,b,c) * count(c) == count(a,c) * count(b,c) on the support;
equality on the support already forces every pair of positive marginals
into the support, since both sides then add up to count(c).
"""
from typing import List, Sequence

import numpy as np
import pandas as pd

from oblivagg.auditor.census import COUNT, JointCensus
from oblivagg.data_models.audit import AuditEntry, CounterExample
from oblivagg.data_models.enum import VerdictEnum


def _exact(series: pd.Series, total: int) -> pd.Series:
    if total * total < 2**63:
        return series.astype(np.int64)
    return series.astype(object).map(int)


def _group_sum(
    df: pd.DataFrame, cols: List[str], total: int
) -> pd.Series:
    if len(cols) == 0:
        return pd.Series(total, index=df.index)
    return df.groupby(cols)[COUNT].transform("sum")


def _counterexample(
    census: JointCensus, row: pd.Series, names: Sequence[str], lhs: int, rhs: int
) -> CounterExample:
    return CounterExample(cell=census.cell(row, names), lhs=lhs, rhs=rhs)


def check_independence(
    census: JointCensus,
    a: Sequence[str],
    b: Sequence[str],
    c: Sequence[str] = (),
    name: str = "independence",
    anchor: str = "",
) -> AuditEntry:
    """Checks A and B conditionally independent given C.

    If A takes a single value in every cell of C the check holds vacuously and
    is reported as PASS_DEGENERATE.

    Args:
        census (JointCensus): census containing every named observable.
        a (Sequence[str]): observables of A.
        b (Sequence[str]): observables of B.
        c (Sequence[str], optional): conditioning observables, none for plain independence.
        name (str): entry name.
        anchor (str): the constraint in words.

    Returns:
        AuditEntry: the verdict, with the first violating cell on failure.
    """
    a_cols, b_cols, c_cols = census.cols(a), census.cols(b), census.cols(c)
    total = census.total
    g = census.counts.groupby(a_cols + b_cols + c_cols, as_index=False)[COUNT].sum()
    n_abc = _exact(g[COUNT], total)
    n_c = _exact(_group_sum(g, c_cols, total), total)
    n_ac = _exact(_group_sum(g, a_cols + c_cols, total), total)
    n_bc = _exact(_group_sum(g, b_cols + c_cols, total), total)
    lhs = n_abc * n_c
    rhs = n_ac * n_bc
    bad = lhs != rhs
    n_cells = len(g) if len(c_cols) == 0 else int(g.groupby(c_cols).ngroups)
    if bad.any():
        i = int(np.flatnonzero(bad.to_numpy())[0])
        return AuditEntry(
            name=name,
            anchor=anchor,
            verdict=VerdictEnum.FAIL,
            cells_examined=n_cells,
            counterexample=_counterexample(
                census, g.iloc[i], list(a) + list(b) + list(c), int(lhs.iloc[i]), int(rhs.iloc[i])
            ),
            detail="count(a,b,c)*count(c) != count(a,c)*count(b,c)",
        )
    if len(c_cols) > 0:
        a_values = g.groupby(c_cols)[a_cols].nunique()
        pinned = bool((a_values == 1).all(axis=None))
    else:
        pinned = len(g.drop_duplicates(a_cols)) == 1
    return AuditEntry(
        name=name,
        anchor=anchor,
        verdict=VerdictEnum.PASS_DEGENERATE if pinned else VerdictEnum.PASS,
        cells_examined=n_cells,
        detail="conditioning determines the protected variable" if pinned else "",
    )


def _per_cell(census: JointCensus, target: Sequence[str], given: Sequence[str]) -> pd.DataFrame:
    """Per conditioning cell: distinct target values and their smallest and largest count."""
    t_cols, g_cols = census.cols(target), census.cols(given)
    joint = census.counts.groupby(t_cols + g_cols, as_index=False)[COUNT].sum()
    if len(g_cols) == 0:
        joint["_cell"] = 0
        g_cols = ["_cell"]
    stats = joint.groupby(g_cols)[COUNT].agg(["size", "min", "max"])
    return stats.rename(columns={"size": "support"}).reset_index()


def check_uniformity(
    census: JointCensus,
    target: Sequence[str],
    given: Sequence[str],
    support: int,
    name: str,
    anchor: str = "",
    at_least: bool = False,
) -> AuditEntry:
    """Checks that in every cell of `given` the target is uniform on `support` values.

    A distribution on n equally counted values has entropy log_q(n), so this is
    the integer form of an entropy identity.

    Args:
        census (JointCensus): census containing every named observable.
        target (Sequence[str]): observables whose conditional distribution is checked.
        given (Sequence[str]): conditioning observables, may be empty.
        support (int): required number of distinct target values per cell.
        name (str): entry name.
        anchor (str): the constraint in words.
        at_least (bool, optional): accept more than `support` equally counted values.

    Returns:
        AuditEntry: the verdict.
    """
    stats = _per_cell(census, target, given)
    small = stats["support"] < support if at_least else stats["support"] != support
    uneven = stats["min"] != stats["max"]
    observed = sorted(set(int(s) for s in stats["support"]))
    detail = f"support={observed[0] if len(observed) == 1 else observed} required={support}"
    counterexample = None
    if small.any():
        row = stats[small].iloc[0]
        counterexample = (row, int(row["support"]), support)
    elif uneven.any():
        row = stats[uneven].iloc[0]
        counterexample = (row, int(row["min"]), int(row["max"]))
    if counterexample is None:
        return AuditEntry(
            name=name,
            anchor=anchor,
            verdict=VerdictEnum.PASS,
            cells_examined=len(stats),
            detail=detail,
        )
    row, lhs, rhs = counterexample
    return AuditEntry(
        name=name,
        anchor=anchor,
        verdict=VerdictEnum.FAIL,
        cells_examined=len(stats),
        counterexample=_counterexample(census, row, given, lhs, rhs),
        detail=detail,
    )


def check_recovery(
    census: JointCensus,
    target: Sequence[str],
    view: Sequence[str],
    name: str,
    anchor: str = "",
) -> AuditEntry:
    """Checks whether a view determines the target in every cell.

    Full recovery breaks security, so it is reported as FAIL; the counterexample
    is a view cell with its recovered target; the view cell count and the
    joint count coincide.

    Args:
        census (JointCensus): census containing every named observable.
        target (Sequence[str]): the protected observables.
        view (Sequence[str]): what the adversary sees.
        name (str): entry name.
        anchor (str): the constraint in words.

    Returns:
        AuditEntry: FAIL if the view recovers the target everywhere, PASS otherwise.
    """
    stats = _per_cell(census, target, view)
    recovered = stats["support"] == 1
    n_recovered = int(recovered.sum())
    detail = f"{n_recovered} of {len(stats)} view cells determine {', '.join(target)}"
    if not recovered.all():
        return AuditEntry(
            name=name,
            anchor=anchor,
            verdict=VerdictEnum.PASS,
            cells_examined=len(stats),
            detail=detail,
        )
    joint = census.marginal(list(target) + list(view))
    row = joint.iloc[0]
    return AuditEntry(
        name=name,
        anchor=anchor,
        verdict=VerdictEnum.FAIL,
        cells_examined=len(stats),
        counterexample=_counterexample(
            census,
            row,
            list(view) + list(target),
            int(row[COUNT]),
            int(row[COUNT]),
        ),
        detail=detail,
    )
