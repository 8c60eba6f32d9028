"""Shared utilities for fsdaudit."""

from .common import count_noun
from .logging import InterceptHandler, LogLevel, console, instantiate_logger

__all__ = [
    "InterceptHandler",
    "LogLevel",
    "console",
    "count_noun",
    "instantiate_logger",
]
