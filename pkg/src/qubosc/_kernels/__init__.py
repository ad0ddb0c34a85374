"""Propagation kernels: compiled extension if available, numpy fallback.

Both backends implement the same entry point, ``rk4_history``.  The
compiled one is selected at import time unless QUBOSC_PURE_PYTHON is set
to a non-empty value.  ``backend_name()`` reports which one is active.
"""

import os

from qubosc._kernels import _rk4_py

if os.environ.get("QUBOSC_PURE_PYTHON"):
    _impl = _rk4_py
else:
    try:
        from qubosc._kernels import _rk4_cy as _impl
    except ImportError:
        _impl = _rk4_py

rk4_history = _impl.rk4_history


def backend_name() -> str:
    return "cython" if _impl.__name__.endswith("_rk4_cy") else "python"
