from typing import Optional, Sequence, Union

import numpy as np

from oblivagg.data_models.field import FieldSpec, FieldVector
from oblivagg.errors import EmptySumError, FieldSpecMismatchError, LengthMismatchError
from oblivagg.field.arithmetic import mod_add, mod_sub, mod_sum

TSeed = Union[None, int, np.random.SeedSequence]


def make_rng(seed: TSeed = None) -> np.random.Generator:
    """Deterministic counter-based generator (Philox).

    Args:
        seed (int | SeedSequence, optional): seed of the generator. `None` draws
            fresh entropy from the operating system.

    Returns:
        np.random.Generator: the generator.
    """
    return np.random.Generator(np.random.Philox(seed))


def _check_compatible(a: FieldVector, b: FieldVector) -> None:
    if a.spec != b.spec:
        raise FieldSpecMismatchError(
            f"vectors live over F_{a.spec.q} and F_{b.spec.q}"
        )
    if len(a) != len(b):
        raise LengthMismatchError(f"vector lengths {len(a)} and {len(b)} differ")


def add(a: FieldVector, b: FieldVector) -> FieldVector:
    """Elementwise (a_i + b_i) mod q."""
    _check_compatible(a, b)
    return FieldVector.from_numpy(
        a.spec, mod_add(a.to_numpy(), b.to_numpy(), a.spec.q)
    )


def sub(a: FieldVector, b: FieldVector) -> FieldVector:
    """Elementwise (a_i - b_i) mod q."""
    _check_compatible(a, b)
    return FieldVector.from_numpy(
        a.spec, mod_sub(a.to_numpy(), b.to_numpy(), a.spec.q)
    )


def sum_vectors(vectors: Sequence[FieldVector]) -> FieldVector:
    """Elementwise modular sum of a nonempty sequence of vectors.

    Raises:
        EmptySumError: if `vectors` is empty.
        FieldSpecMismatchError: if the vectors live over different fields.
        LengthMismatchError: if the vectors differ in length.
    """
    if len(vectors) == 0:
        raise EmptySumError("cannot sum an empty sequence of vectors")
    for v in vectors[1:]:
        _check_compatible(vectors[0], v)
    spec = vectors[0].spec
    stacked = np.stack([v.to_numpy() for v in vectors])
    return FieldVector.from_numpy(spec, mod_sum(stacked, spec.q, axis=0))


def sample_elements(q: int, shape, rng: np.random.Generator) -> np.ndarray:
    """Uniform residues in [0, q); numpy's bounded integers reject instead of reducing."""
    return rng.integers(0, q, size=shape, dtype=np.uint64, endpoint=False)


def sample_uniform(
    spec: FieldSpec, length: int, rng: Optional[np.random.Generator] = None
) -> FieldVector:
    """Draws a vector of `length` i.i.d. uniform elements of F_q.

    Args:
        spec (FieldSpec): the field.
        length (int): number of elements, may be zero.
        rng (np.random.Generator, optional): seeded generator, see `make_rng`.

    Returns:
        FieldVector: the sampled vector.
    """
    if length < 0:
        raise ValueError(f"length has to be non-negative, got {length}")
    rng = rng if rng is not None else make_rng()
    return FieldVector.from_numpy(spec, sample_elements(spec.q, length, rng))
