"""Engine settings management."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(slots=True)
class Settings:
    """Runtime defaults shared by the services."""

    degree_cap: int = 64
    confirm_window: int = 2
    max_den: int = 12
    max_literal_bits: int = 64

    def e_max_for(self, p: int) -> int:
        """Return the default chain level for characteristic ``p``.

        Chain cost grows like p^(n*d), so the level shrinks as p grows:
        6, 5, 4, 4, 3 for p = 2, 3, 5, 7, 11.
        """

        return max(2, 7 - (p - 1).bit_length())

    def with_overrides(self, **changes: object) -> "Settings":
        """Return a copy with the given fields replaced."""

        return replace(self, **changes)


def load_settings() -> Settings:
    """Build the default settings (flags are the only override mechanism)."""

    return Settings()


settings = load_settings()
