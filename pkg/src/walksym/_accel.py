"""Backend selection for the compiled kernels.

Set ``WALKSYM_DISABLE_NUMBA=1`` before import to force the pure-numpy
kernels.  numba missing from the environment has the same effect.
"""
import os

_FLAG = "WALKSYM_DISABLE_NUMBA"

try:
    import numba
    from numba import prange

    HAVE_NUMBA = True
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # the system TBB is too old for numba; workqueue is always present
        numba.config.THREADING_LAYER = "workqueue"
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    prange = range
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get(_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


def njit(*args, **kwargs):
    """``numba.njit`` when numba is importable, identity otherwise.

    Kernels are always compiled lazily on first call, so importing this
    module never pays the JIT cost.
    """
    if HAVE_NUMBA:
        return numba.njit(*args, cache=True, **kwargs)

    def wrap(fn):
        return fn

    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return wrap


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
