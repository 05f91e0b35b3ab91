"""Resource budgets shared by the enumeration-heavy routines.

Every budget can be overridden through the environment; the values are read
at call time so tests and the CLI can adjust them without reloading modules.
"""
from __future__ import annotations

import os

DEFAULT_SEMIGROUP_LIMIT = 10_000_000
DEFAULT_SUBSET_LIMIT = 1_000_000
DEFAULT_PAIR_LIMIT = 5_000_000
DEFAULT_DERIVATIVE_LIMIT = 100_000
MAX_ATOM_STATES = 16
MAX_SUBSET_WIDTH = 64


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration outgrows its configured budget."""

    def __init__(self, what: str, limit: int, reached: int | None = None):
        self.what = what
        self.limit = limit
        self.reached = reached
        msg = f"{what} budget of {limit} exceeded"
        if reached is not None:
            msg += f" (reached {reached})"
        super().__init__(msg)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if not raw:
        return default
    return int(raw)


def semigroup_limit() -> int:
    return _env_int("ACLAB_SEMIGROUP_LIMIT", DEFAULT_SEMIGROUP_LIMIT)


def subset_limit() -> int:
    return _env_int("ACLAB_SUBSET_LIMIT", DEFAULT_SUBSET_LIMIT)


def pair_limit() -> int:
    return _env_int("ACLAB_PAIR_LIMIT", DEFAULT_PAIR_LIMIT)
