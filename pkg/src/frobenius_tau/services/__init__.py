"""Service layer exports."""

from .frobenius import FrobeniusService
from .ideals import GroebnerService
from .stability import StabilityService
from .tau import TestIdealService
from .thresholds import ThresholdService

__all__ = [
    "FrobeniusService",
    "GroebnerService",
    "StabilityService",
    "TestIdealService",
    "ThresholdService",
]
