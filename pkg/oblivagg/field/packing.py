import numpy as np

from oblivagg.data_models.field import FieldSpec
from oblivagg.errors import CodecError


def pack_elements(values: np.ndarray, spec: FieldSpec) -> bytes:
    """Packs elements little-endian into `spec.element_width` bytes each, no padding."""
    values = np.ravel(np.asarray(values, dtype=np.uint64))
    if np.any(values >= spec.modulus):
        raise CodecError(f"elements are not residues modulo {spec.q}")
    width = spec.element_width
    raw = values.astype("<u8").view(np.uint8).reshape(-1, 8)
    return raw[:, :width].tobytes()


def unpack_elements(data: bytes, spec: FieldSpec, count: int) -> np.ndarray:
    """Inverse of `pack_elements`.

    Raises:
        CodecError: if `data` does not hold exactly `count` elements or an element is >= q.
    """
    width = spec.element_width
    if len(data) != count * width:
        raise CodecError(
            f"expected {count * width} bytes for {count} elements, got {len(data)}"
        )
    padded = np.zeros((count, 8), dtype=np.uint8)
    padded[:, :width] = np.frombuffer(data, dtype=np.uint8).reshape(count, width)
    values = padded.view("<u8").reshape(count).astype(np.uint64)
    if np.any(values >= spec.modulus):
        raise CodecError(f"element out of range for modulus {spec.q}")
    return values
