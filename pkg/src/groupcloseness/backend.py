"""Kernel backend selection.

The hot traversal kernels exist twice: a compiled Cython extension
(``_ckernels``) and a pure-Python twin (``_kernels_py``). The compiled one
is picked at import time when available; set the environment variable
``GROUP_CLOSENESS_BACKEND`` to ``python`` or ``compiled`` to force a
choice. Both backends produce identical results.
"""

from __future__ import annotations

import os

from . import _kernels_py

_requested = os.environ.get("GROUP_CLOSENESS_BACKEND", "").strip().lower()

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

if _requested == "python":
    kernels = _kernels_py
elif _requested == "compiled":
    if _ckernels is None:
        raise ImportError(
            "GROUP_CLOSENESS_BACKEND=compiled but the _ckernels extension "
            "is not built; run `pip install -e . --no-build-isolation`"
        )
    kernels = _ckernels
elif _requested == "":
    kernels = _ckernels if _ckernels is not None else _kernels_py
else:
    raise ValueError(f"unknown GROUP_CLOSENESS_BACKEND {_requested!r}")

BACKEND = "compiled" if kernels is _ckernels else "python"
