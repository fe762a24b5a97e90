"""k-majority tournaments: construction, exact solving, bounds."""

try:
    from ._kmaj import *  # noqa: F401,F403
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _kmaj import *  # noqa: F401,F403
