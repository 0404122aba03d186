"""Numeric hot loops, compiled when the extension is built.

``BACKEND`` reports which implementation is active.  Set ``SPINHARM_PURE_PYTHON=1``
to force the numpy fallback.
"""
import os

from . import _pyeval

BACKEND = "python"
poly_eval_batch = _pyeval.poly_eval_batch

if os.environ.get("SPINHARM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ceval
    except ImportError:
        pass
    else:
        poly_eval_batch = _ceval.poly_eval_batch
        BACKEND = "cython"

__all__ = ["BACKEND", "poly_eval_batch"]
