"""Cayley graphs of right groups and their surface embeddings."""

from ._rightcay import *  # noqa: F401,F403

__version__ = "0.1.0"
