"""Service configuration: defaults < config file < environment."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Optional

ENV_PREFIX = "FEATURELAB_"


@dataclass
class ServiceConfig:
    listen: str = "127.0.0.1:8350"
    data_dir: str = "featurelab-data"
    workers: int = 2
    registry_file: Optional[str] = None  # None -> packaged default registry
    model_grid_file: Optional[str] = None  # None -> built-in hyperparameter grid
    default_k: int = 5
    default_seed: int = 42

    @property
    def host(self) -> str:
        return self.listen.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        return int(self.listen.rsplit(":", 1)[1])


def load_config(path: Optional[str] = None, env: Optional[dict] = None) -> ServiceConfig:
    """Precedence: environment > config file > built-in defaults."""
    env = os.environ if env is None else env
    values: dict = {}
    if path:
        with open(path, encoding="utf-8") as fh:
            values.update(json.load(fh))

    mapping = {
        "LISTEN": ("listen", str),
        "DATA_DIR": ("data_dir", str),
        "WORKERS": ("workers", int),
        "REGISTRY_FILE": ("registry_file", str),
        "MODEL_GRID_FILE": ("model_grid_file", str),
        "DEFAULT_K": ("default_k", int),
        "DEFAULT_SEED": ("default_seed", int),
    }
    for suffix, (field, cast) in mapping.items():
        raw = env.get(ENV_PREFIX + suffix)
        if raw is not None:
            values[field] = cast(raw)

    known = set(ServiceConfig.__dataclass_fields__)
    unknown = set(values) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return ServiceConfig(**values)
