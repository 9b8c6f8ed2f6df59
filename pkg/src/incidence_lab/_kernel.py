"""Backend dispatch for the subset kernel.

The compiled extension is picked up at import time when it was built; the
pure-Python kernel is always available and is also the escape hatch for
coordinates too large for int64 arithmetic.  Both backends compute exactly
the same values, a property the test suite enforces.
"""

from __future__ import annotations

from . import _kernel_py

try:
    from . import _kernel_c
except ImportError:  # extension not built; pure fallback
    _kernel_c = None

# compiled path packs reduced directions into 64-bit words; stay well clear
COORD_BOUND = (1 << 30) - 1

_active = _kernel_c if _kernel_c is not None else _kernel_py


def backend_name() -> str:
    """Name of the backend selected at import ("compiled" or "pure-python")."""
    return _active.BACKEND


def has_compiled() -> bool:
    return _kernel_c is not None


def subset_stats(xs, ys) -> tuple[int, bool]:
    """(max_degree, collinear) for pairwise-distinct integer points.

    Routes to the compiled kernel when available and every coordinate is
    int64-safe; exact either way.
    """
    if _active is _kernel_py:
        return _kernel_py.subset_stats(xs, ys)
    for v in xs:
        if v > COORD_BOUND or v < -COORD_BOUND:
            return _kernel_py.subset_stats(xs, ys)
    for v in ys:
        if v > COORD_BOUND or v < -COORD_BOUND:
            return _kernel_py.subset_stats(xs, ys)
    return _active.subset_stats(xs, ys)
