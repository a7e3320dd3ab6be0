"""Exact McKay-Slodowy correspondence computations.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed layout)
    from . import _core as _impl
except ImportError:  # in-tree builds put _core next to the build directory
    from _core import *  # noqa: F401,F403
    import _core as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
