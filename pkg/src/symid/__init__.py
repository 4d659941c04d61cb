"""Exact identities for elementary symmetric functions."""

from symid.errors import UsageError
from symid.kernels import BACKEND

__all__ = ["BACKEND", "UsageError"]
__version__ = "0.1.0"
