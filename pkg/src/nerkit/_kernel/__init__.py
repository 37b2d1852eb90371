"""Kernel selection: compiled Viterbi when available, NumPy fallback otherwise.

Set ``NERKIT_KERNEL=python`` or ``NERKIT_KERNEL=cython`` to force one
implementation; forcing an unavailable kernel raises at import time.
"""

from __future__ import annotations

import os

from . import _viterbi_py


def _load(name: str):
    if name == "python":
        return _viterbi_py
    from . import _viterbi  # compiled; ImportError if the extension is absent

    return _viterbi


_forced = os.environ.get("NERKIT_KERNEL")
if _forced:
    if _forced not in ("python", "cython"):
        raise ImportError(f"NERKIT_KERNEL must be 'python' or 'cython', got {_forced!r}")
    _impl = _load(_forced)
else:
    try:
        _impl = _load("cython")
    except ImportError:
        _impl = _viterbi_py

viterbi_path = _impl.viterbi_path
ACTIVE_KERNEL = _impl.IMPLEMENTATION


def available_kernels() -> list[str]:
    """Names of the kernels importable in this environment."""
    names = ["python"]
    try:
        _load("cython")
        names.append("cython")
    except ImportError:
        pass
    return names


def get_kernel(name: str):
    """Fetch one kernel module by name (for benchmarks and cross-checks)."""
    return _load(name)
