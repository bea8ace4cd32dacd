"""Pick the compiled kernels when they import, else the pure-Python ones.

Set ``PERMTAB_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("PERMTAB_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

count_vincular = _impl.count_vincular
shape_fillings = _impl.shape_fillings


def backends() -> dict[str, object]:
    """Every importable kernel module, keyed by name."""
    found: dict[str, object] = {"python": _pykernels}
    try:
        from . import _kernels

        found["cython"] = _kernels
    except ImportError:
        pass
    return found
