"""Application entry point."""

from __future__ import annotations

import sys

from .cli import app


def main(argv: list[str] | None = None) -> int:
    """Dispatch ``argv`` to a subcommand and return its exit code."""

    try:
        app(args=argv, prog_name="frobenius-tau")
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
