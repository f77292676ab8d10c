"""ordkit: exact computations around element orders and automorphism orbits.

Counting invariants of finite groups: element-order sets of symmetric,
alternating and Lie-type groups, maximal-torus exponents, class-number
and orbit-count bounds, and the threshold scans built from them.
"""

__version__ = "0.1.0"

from . import numkit, partitions, permcyc, oracle, symalt, liecat, tori, bounds, canforms

__all__ = [
    "__version__",
    "numkit",
    "partitions",
    "permcyc",
    "oracle",
    "symalt",
    "liecat",
    "tori",
    "bounds",
    "canforms",
]
