"""Bessel normalizations, the fractional differential operator, closed-form
bounds and univalence criteria (C++ core)."""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, UnsupportedError, AccuracyError, ConfigError  # noqa: F401

__version__ = "0.1.0"
