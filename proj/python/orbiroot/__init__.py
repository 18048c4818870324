"""Parabolic bundles and bundles on root stacks over a marked curve."""

from ._orbiroot import *  # noqa: F401,F403
from ._orbiroot import DomainError, VerificationError  # noqa: F401

__version__ = "0.1.0"
