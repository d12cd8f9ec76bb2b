"""Backend selection for the crossing kernels.

The compiled extension ``_ckernels`` is used when it imports and the
coordinates fit its int64 bound; otherwise the pure-Python module runs.
Set ``CROSSNUM_PURE_PYTHON=1`` to force the fallback.
"""

import os

import numpy as np

from . import _pykernels

INT64_SAFE = 1 << 29

_compiled = None
if os.environ.get("CROSSNUM_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = _compiled.BACKEND if _compiled is not None else _pykernels.BACKEND

edge_list = _pykernels.edge_list


def _pick(xs, ys, backend):
    if backend == "python" or _compiled is None:
        return _pykernels, False
    if backend == "cython":
        return _compiled, True
    bound = max((abs(int(c)) for c in (*xs, *ys)), default=0)
    if bound <= INT64_SAFE:
        return _compiled, True
    return _pykernels, False


def _args(xs, ys, parts, compiled):
    if compiled:
        return (
            np.asarray(xs, dtype=np.int64),
            np.asarray(ys, dtype=np.int64),
            np.asarray(parts, dtype=np.int64),
        )
    return [int(x) for x in xs], [int(y) for y in ys], [int(p) for p in parts]


def scan(xs, ys, parts, collect=False, backend="auto"):
    """Return ``(two_two, two_one_one, one_one_one_one, pairs)`` for an integer drawing."""
    mod, compiled = _pick(xs, ys, backend)
    return mod.scan(*_args(xs, ys, parts, compiled), collect)


def validate(xs, ys, parts, backend="auto"):
    mod, compiled = _pick(xs, ys, backend)
    mod.validate(*_args(xs, ys, parts, compiled))


def vertex_crossings(xs, ys, parts, v, backend="auto"):
    mod, compiled = _pick(xs, ys, backend)
    return int(mod.vertex_crossings(*_args(xs, ys, parts, compiled), v))


def has_compiled():
    return _compiled is not None
