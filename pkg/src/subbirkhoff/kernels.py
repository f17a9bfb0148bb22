"""Backend selection for the integer kernels.

The compiled extension is used when it imports; otherwise the pure-Python
twin. Set ``SUBBIRKHOFF_PURE=1`` to force the Python backend.
"""
from __future__ import annotations

import os
from types import ModuleType

from subbirkhoff import _pykernels


def _load() -> tuple[ModuleType, str]:
    if os.environ.get("SUBBIRKHOFF_PURE"):
        return _pykernels, "python"
    try:
        from subbirkhoff import _ckernels
    except ImportError:
        return _pykernels, "python"
    return _ckernels, "cython"


_impl, BACKEND = _load()

bipartite_matching = _impl.bipartite_matching
strong_components = _impl.strong_components
permutation_cover = _impl.permutation_cover
zero_block_exists = _impl.zero_block_exists


def backends() -> dict[str, ModuleType]:
    """All importable backends by name."""
    found = {"python": _pykernels}
    try:
        from subbirkhoff import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
