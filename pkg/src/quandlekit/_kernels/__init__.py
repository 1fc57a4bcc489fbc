"""Kernel backend selection.

The compiled Cython backend is used when available; the pure-Python twin is
the fallback.  Set ``QUANDLEKIT_PURE=1`` to force the pure backend (useful
for benchmarking and differential testing).
"""
import os

if os.environ.get("QUANDLEKIT_PURE") == "1":
    from . import _pure as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl

BACKEND = _impl.BACKEND
closure_elements = _impl.closure_elements
a1_violations = _impl.a1_violations
conjugation_table = _impl.conjugation_table

__all__ = ["BACKEND", "closure_elements", "a1_violations", "conjugation_table"]
