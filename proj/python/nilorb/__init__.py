"""Exact orbit calculus for parabolic conjugation on nilpotent matrices."""

from ._nilorb import *  # noqa: F401,F403
from ._nilorb import __doc__  # noqa: F401
