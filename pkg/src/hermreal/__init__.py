"""Exact arithmetic and certificates for formally real involutions."""

__version__ = "0.1.0"
