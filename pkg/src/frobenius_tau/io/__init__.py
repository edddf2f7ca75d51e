"""Text parsing and certificate output."""

from .certificates import build_certificate, dumps, ideal_to_strings
from .parsing import parse_divisor, parse_generators, parse_polynomial, parse_rational

__all__ = [
    "build_certificate",
    "dumps",
    "ideal_to_strings",
    "parse_divisor",
    "parse_generators",
    "parse_polynomial",
    "parse_rational",
]
