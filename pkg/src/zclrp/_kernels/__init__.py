"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the
pure-Python twin is used.  Set ZCLRP_BACKEND=pure or ZCLRP_BACKEND=compiled
to force a choice (forcing "compiled" raises if the extension is missing).
"""

import os

from . import pure

_forced = os.environ.get("ZCLRP_BACKEND")
if _forced not in (None, "", "pure", "compiled"):
    raise ImportError(
        f"unknown ZCLRP_BACKEND {_forced!r}; expected 'pure' or 'compiled'")

if _forced == "pure":
    _impl = pure
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        if _forced == "compiled":
            raise
        _impl = pure

RingKernel = _impl.RingKernel
rref = _impl.rref
BACKEND_NAME = _impl.BACKEND_NAME

__all__ = ["RingKernel", "rref", "BACKEND_NAME", "pure"]
