"""
Backend selection: the compiled kernel when available, else the pure-Python
reference kernel.

Set ``SNHECKE_BACKEND=python`` (or ``cython``) to force a choice; forcing
``cython`` raises if the extension was not built.  Kernels are cached per
degree and are safe to share between threads for reads; the canonical-basis
build and dual-element memoization run under a lock.
"""

from __future__ import annotations

import os
import threading

from . import _kernel_py

try:
    from . import _kernel as _compiled
except ImportError:  # pragma: no cover - depends on the build environment
    _compiled = None

_FORCED = os.environ.get("SNHECKE_BACKEND", "").strip().lower()
if _FORCED in ("python", "py", "pure"):
    _impl = _kernel_py
    BACKEND = "python"
elif _FORCED in ("cython", "c", "compiled"):
    if _compiled is None:
        raise ImportError(
            "SNHECKE_BACKEND=cython requested but the compiled kernel is not built; "
            "run `pip install -e . --no-build-isolation`"
        )
    _impl = _compiled
    BACKEND = "cython"
elif _compiled is not None:
    _impl = _compiled
    BACKEND = "cython"
else:
    _impl = _kernel_py
    BACKEND = "python"

_kernels: dict[tuple[str, int], object] = {}
_lock = threading.Lock()


def get_kernel(n: int, backend: str | None = None):
    """The per-degree kernel singleton (optionally for an explicit backend)."""
    name = backend or BACKEND
    key = (name, n)
    got = _kernels.get(key)
    if got is not None:
        return got
    with _lock:
        got = _kernels.get(key)
        if got is None:
            if name == "python":
                got = _kernel_py.Kernel(n)
            elif name == "cython":
                if _compiled is None:
                    raise ImportError("compiled kernel not available")
                got = _compiled.Kernel(n)
            else:
                raise ValueError(f"unknown backend {name!r}")
            _kernels[key] = got
    return got


def available_backends() -> tuple[str, ...]:
    return ("python",) if _compiled is None else ("cython", "python")
