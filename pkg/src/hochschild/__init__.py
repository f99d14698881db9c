"""Exact Hochschild cohomology of monoid objects in monoidal categories."""

__version__ = "0.1.0"
