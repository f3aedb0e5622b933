"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``BICM_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
if os.environ.get("BICM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

reduced_homology = _impl.reduced_homology
rank_mod_p = _impl.rank_mod_p

__all__ = ["BACKEND", "reduced_homology", "rank_mod_p"]
