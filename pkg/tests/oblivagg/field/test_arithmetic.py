import numpy as np
import pytest

from oblivagg.field.api import mod_add, mod_neg, mod_sub, mod_sum

Q63 = 9223372036854775783
Q64 = 18446744073709551557


@pytest.mark.parametrize(
    "a, b, q, expected",
    [
        ([2], [2], 3, [1]),
        ([0, 0], [3, 4], 5, [3, 4]),
        ([4, 1], [1, 3], 5, [0, 4]),
        ([Q63 - 1], [Q63 - 1], Q63, [Q63 - 2]),
        ([Q64 - 1], [Q64 - 2], Q64, [Q64 - 3]),
    ],
)
def test_mod_add(a, b, q, expected):
    assert mod_add(np.array(a, dtype=np.uint64), np.array(b, dtype=np.uint64), q).tolist() == expected


@pytest.mark.parametrize(
    "a, b, q, expected",
    [
        ([0], [1], 3, [2]),
        ([1, 4], [4, 1], 5, [2, 3]),
        ([0], [Q64 - 1], Q64, [1]),
    ],
)
def test_mod_sub(a, b, q, expected):
    assert mod_sub(np.array(a, dtype=np.uint64), np.array(b, dtype=np.uint64), q).tolist() == expected


def test_mod_neg_keeps_zero():
    assert mod_neg(np.array([0, 1, 4], dtype=np.uint64), 5).tolist() == [0, 4, 1]


def test_mod_sum_axis_and_empty():
    a = np.array([[1, 2], [3, 4], [4, 4]], dtype=np.uint64)
    assert mod_sum(a, 5, axis=0).tolist() == [3, 0]
    assert mod_sum(a, 5, axis=1).tolist() == [3, 2, 3]
    assert mod_sum(np.zeros((0, 2), dtype=np.uint64), 5, axis=0).tolist() == [0, 0]
    assert mod_sum([a[0], a[1], a[2]], 5).tolist() == [3, 0]


def test_mod_add_matches_python_ints():
    rng = np.random.default_rng(1)
    a = rng.integers(0, Q64, size=1000, dtype=np.uint64)
    b = rng.integers(0, Q64, size=1000, dtype=np.uint64)
    expected = [(int(x) + int(y)) % Q64 for x, y in zip(a, b)]
    assert mod_add(a, b, Q64).tolist() == expected
    expected = [(int(x) - int(y)) % Q64 for x, y in zip(a, b)]
    assert mod_sub(a, b, Q64).tolist() == expected
