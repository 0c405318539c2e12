"""Squeezing spectra of a singly resonant frequency doubler driven in both modes."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
