"""Select the kernel backend at import time.

The compiled extension is preferred when present; the numpy fallback is used
otherwise. Set DIFFWALK_BACKEND=py (or =c) to force a choice, e.g. for the
backend benchmark or to test the fallback path.
"""

import os

_requested = os.environ.get("DIFFWALK_BACKEND", "").strip().lower()

if _requested in ("py", "python"):
    from . import _kernel_py as kernel
elif _requested == "c":
    from . import _kernel as kernel  # type: ignore[no-redef]
elif _requested == "":
    try:
        from . import _kernel as kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as kernel
else:
    raise ImportError(f"DIFFWALK_BACKEND must be 'c' or 'py', got {_requested!r}")

BACKEND = kernel.BACKEND_NAME

__all__ = ["kernel", "BACKEND"]
