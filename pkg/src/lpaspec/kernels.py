"""Backend selection for the bitmask kernels.

The compiled extension is used when it imports and the graph fits in 64
bits; otherwise the pure-Python module handles the call. Set
``LPASPEC_BACKEND=python`` to force the fallback everywhere.
"""

import os

from . import _pykernels

try:
    if os.environ.get("LPASPEC_BACKEND", "").lower() == "python":
        raise ImportError("compiled kernels disabled by LPASPEC_BACKEND")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "compiled" if _ckernels is not None else "python"
COMPILED_MAX_VERTICES = 64


def backend_for(n, prefer=None):
    """Return the kernel module to use for a graph with ``n`` vertices."""
    if prefer == "python" or _ckernels is None or n > COMPILED_MAX_VERTICES:
        return _pykernels
    return _ckernels


def available_backends():
    names = ["python"]
    if _ckernels is not None:
        names.append("compiled")
    return names


def get_backend(name):
    if name == "python":
        return _pykernels
    if name == "compiled":
        if _ckernels is None:
            raise ImportError("compiled kernels are not built")
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
