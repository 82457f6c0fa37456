"""Hot census kernels with a numba default and a pure-numpy fallback.

The backend is chosen once at import time:

* ``COVERTWIST_BACKEND=numpy`` forces the vectorized numpy path;
* ``COVERTWIST_BACKEND=numba`` insists on the compiled path (raising if
  numba is missing);
* unset, numba is used when importable, numpy otherwise.

Both backends produce bit-identical profile codes; ``bench/bench_kernels.py``
times them against each other.
"""

import os

from .common import (
    MAX_KERNEL_DEGREE,
    MAX_KERNEL_PRIME,
    RAMIFIED,
    coeff_matrix,
    decode_code,
    encode_parts,
    kernel_eligible,
)

_requested = os.environ.get("COVERTWIST_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"COVERTWIST_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

if _requested == "numpy":
    from . import _numpy_backend as _impl
else:
    try:
        from . import _numba_backend as _impl
    except ImportError:
        if _requested == "numba":
            raise
        from . import _numpy_backend as _impl

profile_codes_range = _impl.profile_codes_range
BACKEND = _impl.NAME

__all__ = [
    "BACKEND",
    "MAX_KERNEL_DEGREE",
    "MAX_KERNEL_PRIME",
    "RAMIFIED",
    "coeff_matrix",
    "decode_code",
    "encode_parts",
    "kernel_eligible",
    "profile_codes_range",
]
