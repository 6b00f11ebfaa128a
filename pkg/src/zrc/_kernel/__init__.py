"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the pure
backend is always available.  ``ZRC_KERNEL=pure`` (or ``cython``) forces
a backend, which the benchmark and the backend-parity tests use.
"""

from __future__ import annotations

import os

from . import pure as _pure
from .tables import B_OVER_FACT, BERNOULLI_EVEN, MAX_ORDER

try:
    from . import _em as _compiled
except ImportError:  # extension not built on this install
    _compiled = None


def available_backends() -> tuple[str, ...]:
    return ("cython", "pure") if _compiled is not None else ("pure",)


def get_backend(name: str):
    """Return the kernel module for an explicit backend name."""
    if name == "pure":
        return _pure
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernel extension is not available")
        return _compiled
    raise ValueError(f"unknown kernel backend {name!r}")


_forced = os.environ.get("ZRC_KERNEL", "").strip().lower()
if _forced:
    _selected = get_backend(_forced)
else:
    _selected = _compiled if _compiled is not None else _pure

BACKEND = _selected.BACKEND_NAME
em_partial = _selected.em_partial

__all__ = [
    "BACKEND",
    "B_OVER_FACT",
    "BERNOULLI_EVEN",
    "MAX_ORDER",
    "available_backends",
    "em_partial",
    "get_backend",
]
