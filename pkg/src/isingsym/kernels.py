"""Kernel backend selection: compiled extension if present, numpy otherwise."""

import os

if os.environ.get("ISINGSYM_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

fwht = _impl.fwht
BACKEND = _impl.BACKEND
