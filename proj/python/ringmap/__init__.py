"""Rings of q-gons in 3-valent planar maps."""

from ._ringmap import *  # noqa: F401,F403
from ._ringmap import __doc__  # noqa: F401
