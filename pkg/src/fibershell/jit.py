"""JIT dispatch for the hot numerical kernels.

Kernels are written once in numba-compatible numpy style. With numba
available (and not disabled) they are compiled with ``@njit``; otherwise
the same functions run as pure numpy/Python. Set ``FIBERSHELL_NO_JIT=1``
to force the interpreted fallback, e.g. for debugging or benchmarking.
"""

import os

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dep, but stay usable
    numba = None
    HAS_NUMBA = False

JIT_ENABLED = HAS_NUMBA and os.environ.get("FIBERSHELL_NO_JIT", "0") != "1"


def njit(fn=None, **kwargs):
    """``@njit``-or-identity decorator, honoring the env switch."""

    def wrap(f):
        if JIT_ENABLED:
            kwargs.setdefault("cache", True)
            return numba.njit(**kwargs)(f)
        return f

    if fn is not None:
        return wrap(fn)
    return wrap
