"""Letter-count limit keeping brute-force truth tables desk-scale."""

from __future__ import annotations

import os

from .errors import LimitError

DEFAULT_MAX_LETTERS = 20
_ENV_VAR = "LOGICREL_MAX_LETTERS"


def max_letters() -> int:
    """Current letter limit; the LOGICREL_MAX_LETTERS env var overrides the default."""
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_LETTERS
    try:
        value = int(raw)
    except ValueError:
        raise LimitError(f"{_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise LimitError(f"{_ENV_VAR} must be at least 1, got {value}")
    return value
