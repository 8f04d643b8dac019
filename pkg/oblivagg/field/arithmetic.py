"""Elementwise arithmetic modulo q on numpy uint64 arrays.

All inputs are canonical residues in [0, q). The operations never overflow,
even for moduli close to 2**64.
"""
from functools import reduce

import numpy as np


def as_elements(values) -> np.ndarray:
    return np.asarray(values, dtype=np.uint64)


def mod_add(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    a, b = as_elements(a), as_elements(b)
    modulus = np.uint64(q)
    with np.errstate(over="ignore"):
        gap = modulus - b
        return np.where(a >= gap, a - gap, a + b).astype(np.uint64)


def mod_neg(a: np.ndarray, q: int) -> np.ndarray:
    a = as_elements(a)
    with np.errstate(over="ignore"):
        return np.where(a == 0, np.uint64(0), np.uint64(q) - a).astype(np.uint64)


def mod_sub(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    return mod_add(a, mod_neg(b, q), q)


def mod_sum(a: np.ndarray, q: int, axis: int = 0) -> np.ndarray:
    """Sums along `axis` modulo q; an empty axis sums to zero."""
    a = np.moveaxis(as_elements(a), axis, 0)
    zero = np.zeros(a.shape[1:], dtype=np.uint64)
    return reduce(lambda acc, x: mod_add(acc, x, q), a, zero)
