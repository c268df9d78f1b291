"""Backend selection for the adjacency scans.

The compiled module is used when it imports; otherwise (or when
``PATHFREE_BACKEND=python`` is set) the numpy version is used. Callers go
through this module's attributes so :func:`use_backend` takes effect
everywhere.
"""
import os

from . import _kernels_py

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_NAMES = ("row_counts", "col_counts", "edge_count", "first_edge", "select_out")

BACKEND = ""


def available():
    return ["compiled", "python"] if _ckernels is not None else ["python"]


def use_backend(name):
    """Switch every kernel to ``"compiled"`` or ``"python"``."""
    global BACKEND
    if name == "compiled":
        if _ckernels is None:
            raise ImportError("compiled kernels are not built")
        impl = _ckernels
    elif name == "python":
        impl = _kernels_py
    else:
        raise ValueError(f"unknown backend {name!r}")
    g = globals()
    for fn in _NAMES:
        g[fn] = getattr(impl, fn)
    BACKEND = name


use_backend(os.environ.get("PATHFREE_BACKEND")
            or ("compiled" if _ckernels is not None else "python"))
