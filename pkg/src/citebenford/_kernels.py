"""Select the compiled kernels when available, else the pure-Python ones.

Set ``CITEBENFORD_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from citebenford import _pykernels

if os.environ.get("CITEBENFORD_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from citebenford import _ckernels as _impl
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"
    else:
        BACKEND = "cython"

tally_int64 = _impl.tally_int64
tally_float64 = _impl.tally_float64
sample = _impl.sample

__all__ = ["BACKEND", "tally_int64", "tally_float64", "sample"]
