"""Run configuration: bounds, seed, output mode."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

DEFAULT_SEED = 0xD15EA5E
SEED_ENV_VAR = "SUPVAR_SEED"


@dataclass(frozen=True)
class RunConfig:
    seed: int = DEFAULT_SEED
    samples_per_subset: int = 3
    p_max: int = 6
    dimension_budget: int = 20000
    output: str = "json"

    def __post_init__(self):
        if self.samples_per_subset < 1 or self.p_max < 0 or self.dimension_budget < 1:
            raise ValueError("all bounds must be positive")
        if self.output not in ("json", "table"):
            raise ValueError("output must be 'json' or 'table'")


_INT_KEYS = ("seed", "samples_per_subset", "p_max", "dimension_budget")


def load_config(path: str | None = None, env: dict | None = None, **overrides) -> RunConfig:
    """Defaults, then config file, then SUPVAR_SEED, then explicit overrides."""
    env = os.environ if env is None else env
    cfg = RunConfig()
    if path:
        values = {}
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#") or "=" not in line:
                    continue
                key, _, value = line.partition("=")
                key, value = key.strip(), value.strip()
                if key in _INT_KEYS:
                    values[key] = int(value, 0)
                elif key == "output":
                    values[key] = value
        cfg = replace(cfg, **values)
    if SEED_ENV_VAR in env:
        cfg = replace(cfg, seed=int(env[SEED_ENV_VAR], 0))
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if overrides:
        cfg = replace(cfg, **overrides)
    return cfg
