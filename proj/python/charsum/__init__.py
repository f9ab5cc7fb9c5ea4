"""Quadratic character double sums and their main terms."""

from ._charsum import *  # noqa: F401,F403
from ._charsum import __doc__  # noqa: F401
