"""Kernel selection: compiled extension if built, pure Python otherwise.

Set ``ORDROOTS_PURE=1`` to force the pure-Python implementation (used by
the benchmark and the equivalence tests).
"""

import os

from . import _pykernels

if os.environ.get("ORDROOTS_PURE") == "1":
    _impl = _pykernels
    ACTIVE_IMPL = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        ACTIVE_IMPL = "c"
    except ImportError:
        _impl = _pykernels
        ACTIVE_IMPL = "python"

hnf_cols = _impl.hnf_cols
snf_cols = _impl.snf_cols
xgcd = _pykernels.xgcd
