"""Size caps for carriers and derived constructions.

Base carriers are rejected above ``max_carrier()`` elements (default 32,
override with the TENSALG_MAX_CARRIER environment variable or per call).
Materialized power constructions are capped separately because their size
is a power of the base size.
"""

from __future__ import annotations

import os

DEFAULT_MAX_CARRIER = 32
DEFAULT_MAX_POWER_ELEMENTS = 100_000
DEFAULT_ENUM_BUDGET = 1_000_000


def max_carrier(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get("TENSALG_MAX_CARRIER")
    if env is not None:
        return int(env)
    return DEFAULT_MAX_CARRIER


def max_power_elements(override: int | None = None) -> int:
    return DEFAULT_MAX_POWER_ELEMENTS if override is None else int(override)
