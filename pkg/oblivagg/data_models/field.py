from typing import Sequence, Tuple

import numpy as np
from pydantic import validator
from sympy import isprime

from oblivagg.data_models.base import FrozenModel

MAX_MODULUS = 2**64


class FieldSpec(FrozenModel):
    """Prime field F_q.

    Attributes:
        q (int): prime modulus, at least 2 and below 2**64.
    """

    q: int

    @validator("q")
    def validate_q(cls, q):
        """Validates that the modulus is a prime fitting into 64 bits.

        Args:
            q (int): modulus

        Raises:
            ValueError: if q is smaller than 2, does not fit 64 bits or is composite.

        Returns:
            int: the modulus
        """
        if q < 2:
            raise ValueError(f"modulus has to be at least 2, got {q}")
        if q >= MAX_MODULUS:
            raise ValueError(f"modulus {q} does not fit into 64 bits")
        if not isprime(q):
            raise ValueError(f"modulus {q} is not prime")
        return q

    @property
    def element_width(self) -> int:
        """Number of bytes a packed element occupies on the wire."""
        return max(1, ((self.q - 1).bit_length() + 7) // 8)

    @property
    def modulus(self) -> np.uint64:
        return np.uint64(self.q)


class FieldVector(FrozenModel):
    """Vector of canonical residues in [0, q).

    Attributes:
        spec (FieldSpec): the field the elements live in.
        elems (Tuple[int, ...]): the elements.
    """

    spec: FieldSpec
    elems: Tuple[int, ...]

    @validator("elems")
    def validate_elems(cls, elems, values):
        if "spec" not in values:
            return elems
        q = values["spec"].q
        for e in elems:
            if e < 0 or e >= q:
                raise ValueError(f"element {e} is not a canonical residue modulo {q}")
        return elems

    def __len__(self) -> int:
        return len(self.elems)

    def to_numpy(self) -> np.ndarray:
        return np.array(self.elems, dtype=np.uint64)

    @classmethod
    def from_numpy(cls, spec: FieldSpec, values: np.ndarray) -> "FieldVector":
        return cls(spec=spec, elems=tuple(int(v) for v in np.ravel(values).tolist()))

    @classmethod
    def of(cls, q: int, elems: Sequence[int]) -> "FieldVector":
        """Convenience constructor, e.g. `FieldVector.of(5, [3, 4])`."""
        return cls(spec=FieldSpec(q=q), elems=tuple(elems))
