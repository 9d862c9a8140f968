"""Exact vertex connectivity of power graphs of cyclic groups."""

try:
    from ._pgkappa import *  # noqa: F401,F403
except ImportError:  # in-tree runs put the extension on sys.path directly
    from _pgkappa import *  # noqa: F401,F403
