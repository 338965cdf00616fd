"""Bulk-parallel incremental connectivity (C++ core)."""

try:
    from ._bulkcc import *  # noqa: F401,F403
    from ._bulkcc import __doc__  # noqa: F401
except ImportError:  # in-tree build: the extension sits next to the package
    from _bulkcc import *  # noqa: F401,F403
