"""Kernel selection: the compiled module when available, else pure Python.

Set SU2FREE_PURE=1 to force the pure-Python kernels.
"""

import os

import numpy as np

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py
if os.environ.get("SU2FREE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled

        _impl = _compiled
        BACKEND = "cython"
    except ImportError:
        pass


def _arr(x):
    return np.ascontiguousarray(x, dtype=np.int64)


def scan_product(r1, r2, r3, one):
    return tuple(int(v) for v in _impl.scan_product(_arr(r1), _arr(r2), _arr(r3), int(one)))


def scan_pairs(pa, pb, rd, one):
    return tuple(int(v) for v in _impl.scan_pairs(_arr(pa), _arr(pb), _arr(rd), int(one)))


def scan_triples(ra, rb, rc, one):
    return int(_impl.scan_triples(_arr(ra), _arr(rb), _arr(rc), int(one)))


def fiber_pairs(fa, fb, nf):
    return _impl.fiber_pairs(_arr(fa), _arr(fb), int(nf))
