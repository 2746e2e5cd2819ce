"""Backend selection for the pairwise defect scan.

Prefers the compiled Cython kernel and falls back to the pure-numpy one when
the extension is missing. Set FEQLAB_PURE=1 to force the fallback (used by
the benchmark and the backend-equivalence tests). Both backends return
bit-identical results at the supported scales.
"""

import os

from ._defect_np import (  # noqa: F401  (mode constants are part of the API)
    MODE_DALEMBERT,
    MODE_KANNAPPAN,
    MODE_KANNAPPAN_SIGMA_ID,
    MODE_MULTIPLICATIVE,
    MODE_SINE_ADDITION,
    MODE_VANVLECK,
    MODE_WILSON,
)
from . import _defect_np

_force_pure = os.environ.get("FEQLAB_PURE", "") not in ("", "0")

if _force_pure:
    _impl = _defect_np
    BACKEND = "numpy"
else:
    try:
        from . import _defect_cy as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _defect_np
        BACKEND = "numpy"

pair_defect_scan = _impl.pair_defect_scan
