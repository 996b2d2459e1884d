"""Backend selection for the numerical hot kernels.

The compiled extension is preferred when present; the pure python twin is
used otherwise. Both produce identical results. Set ``MAODPP_BACKEND`` to
``python`` or ``compiled`` to force a choice explicitly.
"""

from __future__ import annotations

import os

from . import pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None


def _pick() -> str:
    forced = os.environ.get("MAODPP_BACKEND", "").strip().lower()
    if forced not in ("", "compiled", "python"):
        raise RuntimeError(f"MAODPP_BACKEND must be 'compiled' or 'python', got {forced!r}")
    if forced == "compiled" and _ckernels is None:
        raise RuntimeError("MAODPP_BACKEND=compiled but the extension is not built")
    if forced == "python":
        return "python"
    return "python" if _ckernels is None else "compiled"


ACTIVE = _pick()

jacobi_eigh = pykernels.jacobi_eigh if ACTIVE == "python" else _ckernels.jacobi_eigh


def active_backend() -> str:
    """Name of the backend selected at import time."""
    return ACTIVE


def available_backends() -> tuple[str, ...]:
    return ("python",) if _ckernels is None else ("python", "compiled")


def get_backend(name: str):
    """Eigendecomposition entry point of an explicit backend name."""
    if name == "python":
        return pykernels.jacobi_eigh
    if name == "compiled":
        if _ckernels is None:
            raise RuntimeError("compiled backend is not built")
        return _ckernels.jacobi_eigh
    raise ValueError(f"unknown backend {name!r}")
