"""Backend selection for the integer row-reduction kernels.

The compiled extension is preferred when importable; set
``LEIBNIZ_LAB_BACKEND=python`` or ``=compiled`` to force a choice.
"""

import os

_forced = os.environ.get("LEIBNIZ_LAB_BACKEND", "").strip().lower()

if _forced == "python":
    from . import pure as _impl

    BACKEND = "python"
elif _forced == "compiled":
    from . import _speedups as _impl  # noqa: F401  (ImportError is the right failure here)

    BACKEND = "compiled"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import pure as _impl

        BACKEND = "python"

rref_int = _impl.rref_int
bareiss_det_int = _impl.bareiss_det_int

__all__ = ["BACKEND", "rref_int", "bareiss_det_int"]
