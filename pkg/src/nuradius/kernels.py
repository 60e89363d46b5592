"""Kernel selection.

The compiled extension is used when it imports; set ``NURADIUS_PURE_PYTHON=1``
to force the numpy fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
profile_value = _kernels_py.profile_value
profile_min = _kernels_py.profile_min

if os.environ.get("NURADIUS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels_c
    except ImportError:  # extension not built
        _kernels_c = None
    else:
        BACKEND = "compiled"
        profile_value = _kernels_c.profile_value
        profile_min = _kernels_c.profile_min


def available_backends():
    """Mapping of backend name to module, for tests and benchmarks."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels_c as c
    except ImportError:
        return out
    out["compiled"] = c
    return out
