"""Core infrastructure utilities."""

from .errors import FrobeniusTauError
from .settings import Settings, load_settings, settings

__all__ = ["FrobeniusTauError", "Settings", "load_settings", "settings"]
