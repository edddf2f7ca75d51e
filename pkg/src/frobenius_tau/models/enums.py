"""Enum definitions shared across models."""

from enum import Enum


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class ChainStop(str, Enum):
    """Why a test-ideal chain stopped."""

    STABLE = "stable"
    EXACT = "exact"
    BOUND = "bound"
    CAPPED = "capped"
    TRIVIAL = "trivial"
