"""Exact integer-partition statistics.

Crank, mex, and Frobenius-symbol computations with a verified catalog of
q-series identities and executable sign-reversing involutions. All
arithmetic is exact; partitions are plain lists of ints in weakly
decreasing order.
"""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]
