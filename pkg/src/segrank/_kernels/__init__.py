"""Backend selection for the polynomial kernels.

The compiled extension is preferred when present; the pure-Python module is
the always-available fallback. The active backend can be forced with the
SEGRANK_BACKEND environment variable ("c" or "python") or switched at
runtime with set_backend(), which the benchmark suite uses to compare the
two implementations.
"""

from __future__ import annotations

import os

from . import _pykernels

_BACKENDS = {"python": _pykernels}

try:
    from . import _ckernels  # type: ignore[attr-defined]

    _BACKENDS["c"] = _ckernels
except ImportError:  # extension not built; pure Python carries the load
    _ckernels = None


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def _default_backend() -> str:
    requested = os.environ.get("SEGRANK_BACKEND", "").strip().lower()
    if requested:
        if requested not in _BACKENDS:
            raise ImportError(
                f"SEGRANK_BACKEND={requested!r} unavailable; "
                f"built backends: {available_backends()}"
            )
        return requested
    return "c" if "c" in _BACKENDS else "python"


_active = _BACKENDS[_default_backend()]


def active_backend() -> str:
    return _active.BACKEND_NAME


def set_backend(name: str) -> None:
    global _active
    if name not in _BACKENDS:
        raise ValueError(
            f"unknown backend {name!r}; built backends: {available_backends()}"
        )
    _active = _BACKENDS[name]


def sturm_real_root_count(coeffs) -> int:
    return _active.sturm_real_root_count(coeffs)


def eval_poly(coeffs, xs):
    return _active.eval_poly(coeffs, xs)


def newton_polish(coeffs, roots, iters: int = 8):
    return _active.newton_polish(coeffs, roots, iters)
