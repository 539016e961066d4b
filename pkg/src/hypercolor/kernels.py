"""Kernel backend selection.

The exact-coloring inner loops exist twice: a Cython extension
(hypercolor._kernels) and a pure-Python reference (hypercolor._fallback)
with identical semantics.  The compiled module is used when importable;
set HYPERCOLOR_PURE=1 to force the fallback.  ``BACKEND`` names the active
implementation; benchmarks/bench_backends.py compares the two.
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("HYPERCOLOR_PURE") == "1":
    _impl = _fallback
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _fallback

BACKEND: str = _impl.BACKEND_NAME

graph_color_k = _impl.graph_color_k
hypergraph_color_k = _impl.hypergraph_color_k


def available_backends() -> dict[str, object]:
    """All importable backends, keyed by name (for tests and benchmarks)."""
    backends: dict[str, object] = {_fallback.BACKEND_NAME: _fallback}
    try:
        from . import _kernels

        backends[_kernels.BACKEND_NAME] = _kernels
    except ImportError:
        pass
    return backends
