"""Expose value types for convenient imports."""

from .decomposition import FrobeniusDecomposition
from .divisor import DivisorSpec, DivisorTerm
from .enums import ChainStop, OutputFormat
from .exponent import Exponent, ExponentBox, deg_lex_compare
from .field import FieldConfig, Fp, Ratio, ceil_ratio, fp_inverse
from .ideal import IdealHandle
from .polynomial import Polynomial
from .reports import (
    FptBracket,
    JumpingNumber,
    JumpScanReport,
    PerturbationCheck,
    PerturbationWitness,
    StabilityReport,
    TestIdealReport,
)

__all__ = [
    "ChainStop",
    "DivisorSpec",
    "DivisorTerm",
    "Exponent",
    "ExponentBox",
    "FieldConfig",
    "Fp",
    "FptBracket",
    "FrobeniusDecomposition",
    "IdealHandle",
    "JumpScanReport",
    "JumpingNumber",
    "OutputFormat",
    "PerturbationCheck",
    "PerturbationWitness",
    "Polynomial",
    "Ratio",
    "StabilityReport",
    "TestIdealReport",
    "ceil_ratio",
    "deg_lex_compare",
    "fp_inverse",
]
