"""Backend dispatch for the hot numeric kernels.

Set ``QUADBOUND_BACKEND`` to ``numba`` or ``numpy`` to force a backend;
the default (``auto``) uses numba when it imports cleanly and falls back
to the pure-numpy implementation otherwise.  Both backends expose the
same functions; ``benchmarks/bench_backends.py`` compares them.
"""

import os
import warnings

_requested = os.environ.get("QUADBOUND_BACKEND", "auto").strip().lower()

if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"QUADBOUND_BACKEND must be 'auto', 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import np_backend as _impl
else:
    try:
        from . import nb_backend as _impl
    except ImportError as exc:
        if _requested == "numba":
            raise
        warnings.warn(f"numba backend unavailable ({exc}); using numpy fallback")
        from . import np_backend as _impl

BACKEND = _impl.NAME

comp_sum = _impl.comp_sum
comp_dot = _impl.comp_dot
dd_sin = _impl.dd_sin
cin_dd = _impl.cin_dd
simpson_cin_dd = _impl.simpson_cin_dd
simpson_cin_error = _impl.simpson_cin_error
lambda_fill = _impl.lambda_fill

__all__ = [
    "BACKEND",
    "comp_sum",
    "comp_dot",
    "dd_sin",
    "cin_dd",
    "simpson_cin_dd",
    "simpson_cin_error",
    "lambda_fill",
]
