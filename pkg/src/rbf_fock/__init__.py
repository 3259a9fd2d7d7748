"""Gaussian RBF reproducing-kernel space, the Fock space and the transforms between them."""

from .core import *  # noqa: F401,F403
from .core import __all__ as __all__
