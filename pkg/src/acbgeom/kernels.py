"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the numpy
implementation is used.  Set ``ACBGEOM_PURE_PYTHON=1`` to force the
fallback (the benchmark and the backend-parity tests do this).
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("ACBGEOM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

koszul = _impl.koszul
riemann = _impl.riemann
nabla_endomorphism = _impl.nabla_endomorphism
jacobi = _impl.jacobi

__all__ = ["BACKEND", "koszul", "riemann", "nabla_endomorphism", "jacobi"]
