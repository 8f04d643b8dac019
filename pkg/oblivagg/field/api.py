from oblivagg.field.arithmetic import (  # noqa: F401
    mod_add,
    mod_neg,
    mod_sub,
    mod_sum,
)
from oblivagg.field.packing import pack_elements, unpack_elements  # noqa: F401
from oblivagg.field.vectors import (  # noqa: F401
    add,
    make_rng,
    sample_elements,
    sample_uniform,
    sum_vectors,
    sub,
)
