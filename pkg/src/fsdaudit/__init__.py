"""fsdaudit package."""

from .config import settings

__all__ = ["settings"]
