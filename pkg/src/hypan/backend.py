"""Kernel backend selection.

The compiled extension (hypan._quadscan, built from Cython) is preferred;
the pure-numpy module hypan._quadscan_py is the drop-in fallback. Both
expose the same functions with matching reduction semantics.

HYPAN_THREADS caps the worker count used by partitionable scans (currently
the pure-Python delta scan); the compiled kernels run on one worker.
"""

import os

from . import _quadscan_py as py_kernels

try:
    from . import _quadscan as kernels

    BACKEND = "cython"
except ImportError:  # extension not built; fall back to numpy
    kernels = py_kernels
    BACKEND = "python"


def worker_count() -> int:
    raw = os.environ.get("HYPAN_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
