"""Subset sums from which all inputs can be recovered.

A user that knows its own input and receives the sums over [K] and over
[K] minus each other user (bar one) recovers every input. The
dropout-tolerant scheme hands out exactly such replies when the server
chooses the survivor sets, so it cannot withstand colluding users.
"""
from typing import List, Optional, Sequence

from oblivagg.data_models.field import FieldVector
from oblivagg.data_models.messages import SurvivorSet
from oblivagg.field.vectors import sub, sum_vectors


def _partner(anchor: int) -> int:
    return 1 if anchor != 1 else 2


def recovery_survivor_sets(n_users: int, anchor: int = 1) -> List[SurvivorSet]:
    """Survivor sets whose reply sums reveal every input to `anchor`.

    For the default anchor this is ([K], [K]-{K}, [K]-{K-1}, ..., [K]-{3}).
    Other anchors keep themselves and the smallest remaining id in every set.

    Args:
        n_users (int): number of users K >= 2.
        anchor (int): the user that knows its input.

    Returns:
        List[SurvivorSet]: K-1 survivor sets, the complete set first.
    """
    if n_users < 2:
        raise ValueError(f"at least two users are needed, got {n_users}")
    if anchor < 1 or anchor > n_users:
        raise ValueError(f"anchor {anchor} is not in [1, {n_users}]")
    users = tuple(range(1, n_users + 1))
    kept = {anchor, _partner(anchor)}
    removed = [j for j in reversed(users) if j not in kept]
    return [SurvivorSet(members=users)] + [
        SurvivorSet(members=tuple(u for u in users if u != j)) for j in removed
    ]


def forward_subset_sums(inputs: Sequence[FieldVector]) -> List[FieldVector]:
    """Maps (W_1, ..., W_K) to the sums over `recovery_survivor_sets(K)`.

    Returns:
        List[FieldVector]: (total, total - W_K, total - W_{K-1}, ..., total - W_3).
    """
    if len(inputs) < 2:
        raise ValueError(f"at least two inputs are needed, got {len(inputs)}")
    total = sum_vectors(inputs)
    return [total] + [sub(total, inputs[j - 1]) for j in range(len(inputs), 2, -1)]


def reconstruct_inputs(
    w1: FieldVector,
    subset_sums: Sequence[FieldVector],
    n_users: Optional[int] = None,
) -> List[FieldVector]:
    """Inverts `forward_subset_sums` given the first input.

    Args:
        w1 (FieldVector): the input W_1.
        subset_sums (Sequence[FieldVector]): output of `forward_subset_sums`.
        n_users (int, optional): K; inferred from the number of sums if omitted.

    Raises:
        ValueError: if there are not exactly K-1 subset sums.

    Returns:
        List[FieldVector]: (W_1, ..., W_K).
    """
    n_users = n_users if n_users is not None else len(subset_sums) + 1
    if n_users < 2:
        raise ValueError(f"at least two users are needed, got {n_users}")
    if len(subset_sums) != n_users - 1:
        raise ValueError(
            f"{n_users} users need {n_users - 1} subset sums, got {len(subset_sums)}"
        )
    total = subset_sums[0]
    tail = {j: sub(total, subset_sums[n_users + 1 - j]) for j in range(3, n_users + 1)}
    w2 = sub(total, sum_vectors([w1] + list(tail.values())))
    return [w1, w2] + [tail[j] for j in range(3, n_users + 1)]
