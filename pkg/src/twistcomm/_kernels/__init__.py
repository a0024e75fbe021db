"""Kernel backend selection.

The hot inner loops (table validation, worklist closures, forced homomorphism
extension) exist twice: a Cython extension (``_core``) and a pure-Python
fallback (``pure``).  The extension is preferred when importable; set
``TWISTCOMM_BACKEND=python`` or ``=c`` to force a choice.  Both backends are
exercised by the test suite and compared by ``benchmarks/bench_kernels.py``.
"""

from __future__ import annotations

import os

_requested = os.environ.get("TWISTCOMM_BACKEND", "auto").lower()

if _requested in ("auto", "c", "compiled"):
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _requested != "auto":
            raise
        from . import pure as _impl  # type: ignore[no-redef]
elif _requested in ("py", "python", "pure"):
    from . import pure as _impl  # type: ignore[no-redef]
else:
    raise ValueError(f"unknown TWISTCOMM_BACKEND value {_requested!r}")

BACKEND = _impl.BACKEND_NAME

first_nonassociative = _impl.first_nonassociative
closure = _impl.closure
product_closure_fiber = _impl.product_closure_fiber
forced_extension = _impl.forced_extension
hom_violation = _impl.hom_violation
