from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import CapExceededError, InputError

DEFAULT_CAP = 20
CAP_ENV_VAR = "BETAPACK_CAP"

METHODS = ("brute_force", "branch_and_bound")
FORMATS = ("json", "table", "dot")


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InputError(f"{CAP_ENV_VAR} must be >= 1, got {cap}")
    return cap


def check_cap(n: int, cap: int | None, what: str) -> None:
    """Refuse exhaustive work on graphs with more than ``cap`` vertices."""
    if cap is None:
        cap = default_cap()
    if n > cap:
        raise CapExceededError(
            f"{what} is exhaustive and n={n} exceeds the cap of {cap}; "
            f"raise it with --cap or {CAP_ENV_VAR}"
        )


@dataclass
class RunConfig:
    exhaustive_cap: int = DEFAULT_CAP
    method: str = "branch_and_bound"
    output_format: str = "table"
    seed: int = 0

    def __post_init__(self):
        if self.exhaustive_cap < 1:
            raise InputError("exhaustive_cap must be >= 1")
        if self.method not in METHODS:
            raise InputError(f"method must be one of {METHODS}")
        if self.output_format not in FORMATS:
            raise InputError(f"output format must be one of {FORMATS}")
