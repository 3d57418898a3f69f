"""Runtime limits shared by constructions, the harness and the CLI."""

from __future__ import annotations

import os

DEFAULT_MAX_ORDER = 512
DEFAULT_IDEAL_BUDGET = 4096
ENV_MAX_ORDER = "RINGLAB_MAX_ORDER"


class ConfigError(ValueError):
    pass


def max_order(override: int | None = None) -> int:
    """Resolve the largest ring order we are willing to build.

    Precedence: explicit override > ``RINGLAB_MAX_ORDER`` > default.
    """
    if override is not None:
        if override < 1:
            raise ConfigError(f"max order must be positive, got {override}")
        return override
    raw = os.environ.get(ENV_MAX_ORDER)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{ENV_MAX_ORDER}={raw!r} is not an integer") from None
    if value < 1:
        raise ConfigError(f"{ENV_MAX_ORDER} must be positive, got {value}")
    return value
