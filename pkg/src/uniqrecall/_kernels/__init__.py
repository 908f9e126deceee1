"""Kernel backend selection.

The compiled ``_core`` extension is used when it imports and
``UNIQ_RECALL_PURE`` is unset; otherwise the pure-Python module stands in.
``BACKEND`` names the active one.
"""

import os

import numpy as np

from . import _pure

if os.environ.get("UNIQ_RECALL_PURE"):
    _impl = _pure
    BACKEND = "python"
else:
    try:
        from . import _core as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pure
        BACKEND = "python"


def binomial_mixture(ks, weights, k_max, r, tol, backend=None):
    impl = _pick(backend)
    return impl.binomial_mixture(np.ascontiguousarray(ks, dtype=np.int64),
                                 np.ascontiguousarray(weights, dtype=np.float64),
                                 int(k_max), float(r), float(tol))


def miss_ratios(rhos, a, b, backend=None):
    impl = _pick(backend)
    return impl.miss_ratios(np.ascontiguousarray(rhos, dtype=np.int64), int(a), int(b))


def _pick(backend):
    if backend is None:
        return _impl
    if backend == "python":
        return _pure
    if backend == "cython":
        from . import _core

        return _core
    raise ValueError(f"unknown backend {backend!r}")
