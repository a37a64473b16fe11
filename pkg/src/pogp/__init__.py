"""Partially ordered generalized permutation patterns."""

from pogp.kernels import BACKEND
from pogp.pattern import Pogp
from pogp.perm import Permutation

__all__ = ["BACKEND", "Pogp", "Permutation"]
__version__ = "0.1.0"
