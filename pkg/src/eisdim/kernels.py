"""Kernel backend selection.

Prefers the compiled Cython kernels when the extension was built, else the
pure-Python fallback.  EISDIM_KERNELS=pure forces the fallback (useful for
benchmarking and debugging); EISDIM_KERNELS=cython insists on the compiled
module and fails loudly if it is missing.
"""

import os

from . import _kernels_pure

_choice = os.environ.get("EISDIM_KERNELS", "auto")
if _choice not in ("auto", "pure", "cython"):
    raise ImportError(f"EISDIM_KERNELS must be auto, pure, or cython, not {_choice!r}")

if _choice == "pure":
    _impl = _kernels_pure
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        if _choice == "cython":
            raise
        _impl = _kernels_pure

branch_child_counts = _impl.branch_child_counts
literal_dimension_sum = _impl.literal_dimension_sum
lattice_harmonic_grid = _impl.lattice_harmonic_grid


def kernel_backend() -> str:
    """Name of the active backend: 'cython' or 'pure'."""
    return _impl.BACKEND
