import itertools

import pytest

from oblivagg.data_models.api import FieldSpec, FieldVector
from oblivagg.field.api import make_rng, sample_uniform, sum_vectors
from oblivagg.protocol.api import (
    forward_subset_sums,
    reconstruct_inputs,
    recovery_survivor_sets,
)


def vectors(q, *values):
    return [FieldVector.of(q, [v]) for v in values]


def test_forward_and_reconstruct_three_users():
    w = vectors(7, 1, 2, 3)
    sums = forward_subset_sums(w)
    assert sums == vectors(7, 6, 3)
    assert reconstruct_inputs(w[0], sums) == w


def test_reconstruct_two_users():
    assert reconstruct_inputs(FieldVector.of(5, [4]), vectors(5, 2)) == vectors(5, 4, 3)


def test_reconstruct_wrong_count():
    with pytest.raises(ValueError):
        reconstruct_inputs(FieldVector.of(5, [4]), vectors(5, 2, 1), n_users=4)
    with pytest.raises(ValueError):
        reconstruct_inputs(FieldVector.of(5, [4]), [])
    with pytest.raises(ValueError):
        forward_subset_sums(vectors(5, 1))


@pytest.mark.parametrize(
    "n_users, q, length", list(itertools.product([2, 3, 4, 5], [2, 3, 7], [1, 3]))
)
def test_reconstruct_inverts_forward(n_users, q, length):
    rng = make_rng(n_users * 100 + q * 10 + length)
    spec = FieldSpec(q=q)
    for _ in range(5):
        w = [sample_uniform(spec, length, rng) for _ in range(n_users)]
        assert reconstruct_inputs(w[0], forward_subset_sums(w), n_users=n_users) == w


def test_survivor_sets_match_forward_map():
    w = vectors(97, 5, 17, 33, 41, 60)
    sets = recovery_survivor_sets(5)
    assert [s.members for s in sets] == [
        (1, 2, 3, 4, 5),
        (1, 2, 3, 4),
        (1, 2, 3, 5),
        (1, 2, 4, 5),
    ]
    sums = [sum_vectors([w[u - 1] for u in s.members]) for s in sets]
    assert sums == forward_subset_sums(w)


@pytest.mark.parametrize("anchor, partner", [(1, 2), (2, 1), (4, 1)])
def test_survivor_sets_keep_anchor(anchor, partner):
    sets = recovery_survivor_sets(4, anchor=anchor)
    assert len(sets) == 3
    assert all(anchor in s and partner in s for s in sets)


def test_survivor_sets_errors():
    with pytest.raises(ValueError):
        recovery_survivor_sets(1)
    with pytest.raises(ValueError):
        recovery_survivor_sets(3, anchor=4)


@pytest.mark.slow
def test_reconstruct_inverts_forward_many():
    rng = make_rng(2024)
    for _ in range(1000):
        n_users = int(rng.integers(2, 7))
        q = int(rng.choice([2, 3, 5, 7, 97, 9223372036854775783]))
        length = int(rng.integers(1, 5))
        spec = FieldSpec(q=q)
        w = [sample_uniform(spec, length, rng) for _ in range(n_users)]
        assert reconstruct_inputs(w[0], forward_subset_sums(w)) == w
