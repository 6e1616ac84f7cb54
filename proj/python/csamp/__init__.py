"""Python interface to the complement sampling toolkit."""

from ._csamp import *  # noqa: F401,F403
from ._csamp import __version__  # noqa: F401
