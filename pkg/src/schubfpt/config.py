"""Budgets and worker count.

Resolution order, highest first: command-line flag, environment variable,
JSON config file, built-in default.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

ENV_PREFIX = "SCHUBFPT_"
CONFIG_ENV = "SCHUBFPT_CONFIG"


@dataclass(frozen=True)
class Settings:
    max_elements: int = 10**6
    max_ideals: int = 10**6
    max_multichains: int = 10**7
    max_triples: int = 10**7
    jobs: int = 1


def _coerce(values: dict, source: str) -> dict:
    known = {f.name for f in fields(Settings)}
    out = {}
    for key, value in values.items():
        if key not in known:
            raise ValueError(f"unknown setting {key!r} in {source}")
        try:
            out[key] = int(value)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"setting {key!r} in {source} must be an integer") from exc
        if out[key] < 1:
            raise ValueError(f"setting {key!r} in {source} must be positive")
    return out


def load_settings(config_path: str | os.PathLike | None = None, overrides: dict | None = None,
                  environ: dict | None = None) -> Settings:
    environ = os.environ if environ is None else environ
    settings = Settings()
    path = config_path or environ.get(CONFIG_ENV)
    if path:
        data = json.loads(Path(path).read_text())
        settings = replace(settings, **_coerce(data, str(path)))
    env_values = {
        f.name: environ[ENV_PREFIX + f.name.upper()]
        for f in fields(Settings)
        if ENV_PREFIX + f.name.upper() in environ
    }
    settings = replace(settings, **_coerce(env_values, "environment"))
    if overrides:
        settings = replace(settings, **_coerce({k: v for k, v in overrides.items() if v is not None}, "flags"))
    return settings
