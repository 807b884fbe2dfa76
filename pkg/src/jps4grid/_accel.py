"""Numba switch for the search kernels.

Set ``JPS4GRID_DISABLE_NUMBA=1`` before import to run every kernel as plain
Python over numpy arrays. The kernels are written in the numba-compatible
subset so both paths execute the same source.
"""

import os

_FALSY = {"", "0", "false", "no", "off"}

DISABLED = os.environ.get("JPS4GRID_DISABLE_NUMBA", "").strip().lower() not in _FALSY

try:
    if DISABLED:
        raise ImportError
    from numba import njit as _njit

    ENABLED = True
except ImportError:
    _njit = None
    ENABLED = False


def njit(*args, **kwargs):
    """``numba.njit`` when acceleration is on, identity otherwise."""
    if len(args) == 1 and callable(args[0]) and not kwargs:
        func = args[0]
        return _njit(cache=True)(func) if ENABLED else func

    def wrap(func):
        if not ENABLED:
            return func
        kwargs.setdefault("cache", True)
        return _njit(*args, **kwargs)(func)

    return wrap


def backend_name():
    return "numba" if ENABLED else "python"
