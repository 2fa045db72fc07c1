"""Global capacity limits.

Every expensive operation reads its limit from :data:`CONFIG`.  Use
:func:`override` to change limits temporarily.
"""
from __future__ import annotations

import contextlib
import dataclasses
import json
import os
from dataclasses import dataclass


class CapacityError(RuntimeError):
    """Raised when a computation would exceed a configured cap."""


@dataclass
class Config:
    max_degree: int = 1024
    max_enumeration: int = 200_000
    max_cosets: int = 10_000
    max_nilpotent_order: int = 30_000
    max_nilpotent_classes: int = 10_000
    iso_search_timeout_ms: int = 20_000
    seed: int = 0

    def update(self, **kwargs) -> None:
        names = {f.name for f in dataclasses.fields(self)}
        for key, value in kwargs.items():
            if key not in names:
                raise KeyError(f"unknown config key {key!r}")
            if value is not None:
                setattr(self, key, int(value))

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


CONFIG = Config()

ENV_VAR = "CARTER_KIT_CONFIG"


def load_env_config(config: Config = CONFIG) -> None:
    """Apply overrides from the JSON file named by ``$CARTER_KIT_CONFIG``."""
    path = os.environ.get(ENV_VAR)
    if not path:
        return
    with open(path) as fh:
        config.update(**json.load(fh))


@contextlib.contextmanager
def override(**kwargs):
    saved = CONFIG.as_dict()
    CONFIG.update(**kwargs)
    try:
        yield CONFIG
    finally:
        CONFIG.update(**saved)


def check_cap(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise CapacityError(f"{what} {value} exceeds cap {limit}")
