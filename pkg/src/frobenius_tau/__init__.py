"""Exact test ideals and Frobenius roots over F_p[x1..xd]."""

__all__ = [
    "__version__",
]

__version__ = "0.1.0"
