"""Exact-arithmetic Lie algebra constructions and verification certificates."""

__version__ = "0.1.0"

from .scalars import QQ, GaussianRational, format_value, parse_value, qi  # noqa: F401
