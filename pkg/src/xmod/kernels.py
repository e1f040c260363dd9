"""Backend selection for the tuple-level kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
NumPy versions in ``_kernels_py`` are used. Set ``XMOD_PURE_PYTHON=1`` to force
the fallback.
"""

import os

import numpy as np

from xmod import _kernels_py

if os.environ.get("XMOD_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from xmod import _ckernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.NAME


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def backends():
    """Map of available backend name -> module, fallback always present."""
    found = {"numpy": _kernels_py}
    try:
        from xmod import _ckernels
        found["cython"] = _ckernels
    except ImportError:
        pass
    return found


def bar_mul(x, y, hmul, nmul, act, phi, hord, q, m):
    x, y = np.broadcast_arrays(_i64(x), _i64(y))
    return _impl.bar_mul(_i64(x), _i64(y), _i64(hmul), _i64(nmul), _i64(act), _i64(phi), int(hord), int(q), int(m))


def coord_act(x, g, act, q, ncoords):
    x, g = np.broadcast_arrays(_i64(x), _i64(g))
    return _impl.coord_act(_i64(x), _i64(g), _i64(act), int(q), int(ncoords))


def bar_face(x, i, hmul, nmul, phi, hord, q, m):
    return _impl.bar_face(_i64(x), int(i), _i64(hmul), _i64(nmul), _i64(phi), int(hord), int(q), int(m))


def bar_degen(x, i, nid, hord, q, m):
    return _impl.bar_degen(_i64(x), int(i), int(nid), int(hord), int(q), int(m))


def assoc_witness(table):
    return _impl.assoc_witness(_i64(table))
