"""Quantum channels, complementary channels and output-purity optimization."""

try:
    from ._chancomp import *  # noqa: F401,F403
    from ._chancomp import __version__  # noqa: F401
except ImportError:  # in-tree builds expose the extension next to the package
    from _chancomp import *  # noqa: F401,F403
    from _chancomp import __version__  # noqa: F401
