"""
Run settings for the command-line tools.

Sources, highest precedence first: command-line flags, the `[rbf_fock]` table of a
TOML file given with --config, the defaults below.

    [rbf_fock]
    gammas = [0.5, 1.0, 2.0]
    truncation = 32
    quad_1d = 64
    quad_2d = 48
    convention = "bargmann"     # or "paper"
    seed = 20240101
    tolerance = 1e-6        # optional global override of the per-suite tolerances
    suites = ["weyl"]       # optional, empty means all
    output_format = "json"
    out = "report.json"
"""

# Standard library:
from __future__ import annotations
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Mapping
import logging
import tomllib

# Local:
from .core.common import Convention
from .errors import ConfigError


logger = logging.getLogger(__name__)

CONFIG_TABLE = "rbf_fock"
OUTPUT_FORMATS = ("json", "csv")


@dataclass(frozen=True)
class Settings:
    gammas: tuple[float, ...] = (1.0,)
    truncation: int = 32
    quad_1d: int = 64
    quad_2d: int = 48
    convention: Convention = Convention.BARGMANN
    seed: int = 20240101
    tolerance: float | None = None
    suites: tuple[str, ...] = ()
    output_format: str = "json"
    out: Path | None = None

    def __post_init__(self) -> None:
        if not self.gammas or any(not (isinstance(g, (int, float)) and g > 0) for g in self.gammas):
            raise ConfigError(f"gammas must be a non-empty list of positive numbers, got {self.gammas!r}")
        for name in ("truncation", "quad_1d", "quad_2d"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.truncation < 2:
            raise ConfigError(f"truncation must be at least 2, got {self.truncation}")
        try:
            object.__setattr__(self, "convention", Convention(self.convention))
        except ValueError:
            raise ConfigError(f"convention must be one of {[c.value for c in Convention]}, got {self.convention!r}")
        if self.tolerance is not None and not self.tolerance > 0:
            raise ConfigError(f"tolerance must be positive, got {self.tolerance!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        object.__setattr__(self, "gammas", tuple(float(g) for g in self.gammas))
        object.__setattr__(self, "suites", tuple(self.suites))
        if self.out is not None:
            object.__setattr__(self, "out", Path(self.out))

    def environment(self) -> dict[str, Any]:
        """The settings that determine a verification run, for the report header."""
        return {
            "gammas": list(self.gammas),
            "truncation": self.truncation,
            "quad_1d": self.quad_1d,
            "quad_2d": self.quad_2d,
            "convention": self.convention.value,
            "seed": self.seed,
        }


def _coerce(values: Mapping[str, Any], source: str) -> dict[str, Any]:

    known = {f.name for f in fields(Settings)}
    unknown = sorted(set(values) - known)
    if unknown:
        raise ConfigError(f"{source}: unknown setting(s) {', '.join(unknown)}")

    coerced = dict(values)
    for key in ("gammas", "suites"):
        if key in coerced:
            value = coerced[key]
            coerced[key] = tuple(value) if isinstance(value, (list, tuple)) else (value,)
    return coerced


def read_config_file(path: Path) -> dict[str, Any]:
    """
    Settings from the `[rbf_fock]` table of a TOML file.

    Raises:
        ConfigError: the file is missing, is not valid TOML or has unknown keys
    """
    try:
        with open(path, "rb") as f:
            document = tomllib.load(f)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"{path}: {e}")

    table = document.get(CONFIG_TABLE, {})
    if not isinstance(table, dict):
        raise ConfigError(f"{path}: [{CONFIG_TABLE}] must be a table")
    logger.debug("read %d setting(s) from %s", len(table), path)
    return _coerce(table, str(path))


def load_settings(config_path: Path | None = None, overrides: Mapping[str, Any] | None = None) -> Settings:
    """
    Defaults, then the config file, then `overrides` (flags; None values are ignored).
    """
    settings = Settings()
    if config_path is not None:
        settings = replace(settings, **read_config_file(config_path))
    if overrides:
        given = {k: v for k, v in overrides.items() if v is not None}
        settings = replace(settings, **_coerce(given, "command line"))
    return settings
