"""Backend selection for the hot loops.

The compiled extension ``szl._ckernels`` is used when it imports; otherwise the
pure-Python ``szl._pykernels``. Setting ``SZL_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os

from szl import _pykernels

if os.environ.get("SZL_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from szl import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND: str = _impl.BACKEND
failing_boundaries = _impl.failing_boundaries
achievable_imbalances = _impl.achievable_imbalances
canonical_upper = _impl.canonical_upper
residue_lifts = _pykernels.residue_lifts

__all__ = [
    "BACKEND",
    "achievable_imbalances",
    "canonical_upper",
    "failing_boundaries",
    "residue_lifts",
]
