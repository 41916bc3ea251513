"""Finite m-ary groupoids as dense tables.

Symbols, table entries, and permutation images are 1-based at this
boundary, matching the operation file format and the command line tool.
"""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
