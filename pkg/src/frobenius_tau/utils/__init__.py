"""Utility helpers."""

from .rationals import farey_grid, parse_ratio

__all__ = ["farey_grid", "parse_ratio"]
