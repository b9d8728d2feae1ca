"""Backend dispatch for the histogram kernel.

Prefers the compiled extension; falls back to the pure-Python twin when the
extension is missing or DECLUTTER_BACKEND=python is set. Both backends are
numerically identical, so the choice only affects speed."""

from __future__ import annotations

import os

from . import _kernel_py

_forced = os.environ.get("DECLUTTER_BACKEND", "").lower()

if _forced in ("", "cython", "c"):
    try:
        from . import _histcore as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _forced:
            raise ImportError(
                "DECLUTTER_BACKEND requested the compiled kernel but the "
                "extension is not built")
        _impl = _kernel_py
elif _forced in ("python", "py", "pure"):
    _impl = _kernel_py
else:
    raise ValueError(f"unknown DECLUTTER_BACKEND value {_forced!r}")

BACKEND: str = _impl.BACKEND
histogram_fill = _impl.histogram_fill
bearings_and_distances = _impl.bearings_and_distances


def backends() -> dict[str, object]:
    """All importable kernel modules, keyed by backend name (for parity tests
    and the backend benchmark)."""
    found: dict[str, object] = {"python": _kernel_py}
    try:
        from . import _histcore  # type: ignore[attr-defined]
        found["cython"] = _histcore
    except ImportError:
        pass
    return found
