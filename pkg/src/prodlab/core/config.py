"""Configuration management functions for ProdLab.

Configs are flat key/value tables stored as TOML or JSON. The metadata.json
sidecar written by every run embeds its config under "config", so a run
directory's metadata can be fed back in to reproduce the run.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np
import toml

from ..exceptions import ConfigError, DistributionError
from ..models import ExperimentConfig, ExperimentKind
from ..variates.distributions import make_distribution

DEFAULT_CONFIG: dict[str, Any] = {
    "family": "exponential",
    "params": [1.0],
    "n": 1000,
    "R": 1000,
    "m": 256,
    "workers": 1,
    "out": "prodlab-out",
    "retain_samples": True,
    "n0": 1000,
    "rho": 1.2,
    "cells": 2**14,
    "generator": "iid",
}

DEFAULT_T_GRID = {
    ExperimentKind.FCLT: [0.25, 0.5, 1.0],
    ExperimentKind.EXTREMAL: [0.25, 0.5, 1.0],
}

VALID_KEYS = (
    "kind",
    "family",
    "params",
    "n",
    "R",
    "m",
    "t_grid",
    "seed",
    "workers",
    "out",
    "retain_samples",
    "n0",
    "rho",
    "cells",
    "ridge",
    "generator",
)

KEY_ALIASES = {"replications": "R"}

GENERATORS = ("iid", "coupled")

_SEED_LIMIT = 2**64


def generate_seed() -> int:
    """Draw a fresh master seed from OS entropy.

    Generated seeds stay below 2**63 so that saved TOML configs hold them as
    plain integers.
    """
    return int(np.random.SeedSequence().entropy) % 2**63


def read_config_file(config_path: str | Path) -> dict:
    """Read a raw config table from a TOML or JSON file.

    Raises:
        ConfigError: If the file is missing, unreadable or malformed
    """
    config_file = Path(config_path).expanduser()
    suffix = config_file.suffix.lower()
    if suffix not in (".toml", ".json"):
        raise ConfigError(
            f"Unsupported config format '{suffix or config_file.name}'; "
            "use .toml or .json"
        )
    try:
        with open(config_file) as f:
            raw = toml.load(f) if suffix == ".toml" else json.load(f)
    except toml.TomlDecodeError as e:
        raise ConfigError(f"Invalid TOML in config file '{config_file}': {e}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"Invalid JSON in config file '{config_file}': {e}")
    except OSError as e:
        raise ConfigError(f"Failed to read config file '{config_file}': {e}")

    if not isinstance(raw, dict):
        raise ConfigError(f"Config file '{config_file}' must hold a table")
    # metadata sidecar of an earlier run
    if isinstance(raw.get("config"), dict) and "versions" in raw:
        raw = raw["config"]
    return raw


def _canonical_keys(raw: dict) -> dict:
    out: dict = {}
    for key, value in raw.items():
        name = KEY_ALIASES.get(key, key)
        if name in out:
            raise ConfigError(f"'{key}' duplicates '{name}'; give only one of them")
        out[name] = value
    return out


def load_config(
    config_path: str | Path | None = None,
    overrides: dict | None = None,
    kind: ExperimentKind | str | None = None,
) -> ExperimentConfig:
    """Load, merge and validate an experiment configuration.

    Precedence is ``kind`` > ``overrides`` > file > defaults.

    Args:
        config_path: TOML/JSON config file (optional)
        overrides: Values from command-line flags; None entries are ignored
        kind: Experiment kind forced by a subcommand

    Returns:
        ExperimentConfig with defaults filled in

    Raises:
        ConfigError: If the merged configuration is invalid
    """
    raw: dict = {}
    if config_path is not None:
        raw.update(_canonical_keys(read_config_file(config_path)))
    if overrides:
        raw.update(
            _canonical_keys({k: v for k, v in overrides.items() if v is not None})
        )
    if kind is not None:
        raw["kind"] = kind.value if isinstance(kind, ExperimentKind) else kind

    validate_config(raw)
    return build_config(raw)


def build_config(raw: dict) -> ExperimentConfig:
    """Build an ExperimentConfig from a validated raw dict."""
    kind = ExperimentKind(raw["kind"])
    merged = {**DEFAULT_CONFIG, **raw}
    seed = merged.get("seed")
    seed_generated = seed is None
    if seed_generated:
        seed = generate_seed()
    t_grid = merged.get("t_grid", DEFAULT_T_GRID.get(kind, [1.0]))
    ridge = merged.get("ridge")
    return ExperimentConfig(
        kind=kind,
        spec=make_distribution(merged["family"], merged["params"]),
        n=int(merged["n"]),
        replications=int(merged["R"]),
        m=int(merged["m"]),
        t_grid=[float(t) for t in t_grid],
        seed=int(seed),
        workers=int(merged["workers"]),
        out=Path(merged["out"]).expanduser(),
        retain_samples=bool(merged["retain_samples"]),
        n0=int(merged["n0"]),
        rho=float(merged["rho"]),
        cells=int(merged["cells"]),
        ridge=None if ridge is None else float(ridge),
        generator=merged["generator"],
        seed_generated=seed_generated,
    )


def config_to_dict(config: ExperimentConfig) -> dict:
    """Flat dict that load_config turns back into an identical config."""
    out: dict[str, Any] = {
        "kind": config.kind.value,
        **config.spec.to_dict(),
        "n": config.n,
        "R": config.replications,
        "m": config.m,
        "t_grid": list(config.t_grid),
        "seed": config.seed,
        "workers": config.workers,
        "out": str(config.out),
        "retain_samples": config.retain_samples,
        "n0": config.n0,
        "rho": config.rho,
        "cells": config.cells,
        "generator": config.generator,
    }
    if config.ridge is not None:
        out["ridge"] = config.ridge
    return out


def save_config(config: ExperimentConfig, config_path: str | Path) -> None:
    """Save configuration to a TOML or JSON file (chosen by suffix).

    Raises:
        ConfigError: If config can't be saved
    """
    config_file = Path(config_path).expanduser()
    data = config_to_dict(config)
    validate_config(data)

    try:
        config_file.parent.mkdir(parents=True, exist_ok=True)
        with open(config_file, "w") as f:
            if config_file.suffix.lower() == ".json":
                json.dump(data, f, indent=2)
                f.write("\n")
            else:
                toml.dump(data, f)
    except OSError as e:
        raise ConfigError(f"Failed to save config file '{config_file}': {e}")


def validate_config(config: dict) -> bool:
    """Validate a flat raw configuration dict.

    Args:
        config: Raw configuration with canonical key names

    Returns:
        True if valid

    Raises:
        ConfigError: If a key is unknown or a value is out of range; the
            message names the offending key
    """
    unknown = sorted(k for k in config if k not in VALID_KEYS)
    if unknown:
        raise ConfigError(
            f"Unknown config key '{unknown[0]}'. Valid keys: {', '.join(VALID_KEYS)}"
        )

    kind = _validate_kind(config)
    _validate_distribution(config)

    _require_int(config, "n", minimum=1)
    _require_int(config, "R", minimum=1)
    _require_int(config, "m", minimum=1)
    _require_int(config, "workers", minimum=1)
    _require_int(config, "n0", minimum=3)
    _require_int(config, "cells", minimum=2)
    if "seed" in config and config["seed"] is not None:
        _require_int(config, "seed", minimum=0)
        if config["seed"] >= _SEED_LIMIT:
            raise ConfigError("'seed' must fit in 64 bits")

    _validate_run_config(config)
    _validate_t_grid(config, kind)

    if kind is ExperimentKind.LIL:
        n = config.get("n", DEFAULT_CONFIG["n"])
        n0 = config.get("n0", DEFAULT_CONFIG["n0"])
        if n < n0:
            raise ConfigError(f"'n' ({n}) must be at least 'n0' ({n0}) for lil")

    return True


def _validate_kind(config: dict) -> ExperimentKind:
    if "kind" not in config:
        raise ConfigError("Missing required config key: 'kind'")
    try:
        return ExperimentKind(config["kind"])
    except ValueError:
        valid = ", ".join(k.value for k in ExperimentKind)
        raise ConfigError(
            f"'kind' must be one of {valid}; got '{config['kind']}'"
        ) from None


def _validate_distribution(config: dict) -> None:
    params = config.get("params", DEFAULT_CONFIG["params"])
    if not isinstance(params, list) or not all(_is_number(p) for p in params):
        raise ConfigError("'params' must be a list of numbers")
    family = config.get("family", DEFAULT_CONFIG["family"])
    if not isinstance(family, str):
        raise ConfigError("'family' must be a string")
    try:
        make_distribution(family, params)
    except DistributionError as e:
        raise ConfigError(f"'family'/'params': {e}") from None


def _validate_run_config(config: dict) -> None:
    rho = config.get("rho", DEFAULT_CONFIG["rho"])
    if not _is_number(rho) or not rho > 1.0:
        raise ConfigError("'rho' must be a number greater than 1")

    ridge = config.get("ridge")
    if ridge is not None and (not _is_number(ridge) or ridge < 0):
        raise ConfigError("'ridge' must be a non-negative number")

    out = config.get("out", DEFAULT_CONFIG["out"])
    if not isinstance(out, str) or not out.strip():
        raise ConfigError("'out' must be a non-empty path string")

    retain = config.get("retain_samples", True)
    if not isinstance(retain, bool):
        raise ConfigError("'retain_samples' must be a boolean")

    generator = config.get("generator", DEFAULT_CONFIG["generator"])
    if generator not in GENERATORS:
        raise ConfigError(
            f"'generator' must be one of {', '.join(GENERATORS)}; got '{generator}'"
        )


def _validate_t_grid(config: dict, kind: ExperimentKind) -> None:
    if "t_grid" not in config:
        return
    t_grid = config["t_grid"]
    if not isinstance(t_grid, list) or not t_grid:
        raise ConfigError("'t_grid' must be a non-empty list of numbers")
    lower_open = kind is ExperimentKind.EXTREMAL
    for i, t in enumerate(t_grid):
        if not _is_number(t) or not (0.0 <= t <= 1.0) or (lower_open and t == 0):
            interval = "(0, 1]" if lower_open else "[0, 1]"
            raise ConfigError(f"'t_grid[{i}]' must be a number in {interval}")


def _is_number(value: Any) -> bool:
    return isinstance(value, int | float) and not isinstance(value, bool)


def _require_int(config: dict, key: str, minimum: int) -> None:
    if key not in config:
        return
    value = config[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ConfigError(f"'{key}' must be an integer with {key} ≥ {minimum}")
