#!/usr/bin/env python3
"""
Configuration management for the verification suite.

Supports hierarchical configuration with the following precedence (highest to lowest):
1. Explicit --config path
2. File named by the DIRAC_VERIFY_CONFIG environment variable
3. Project-level .diracrc in current directory (or up to three parents)
4. Global ~/.diracrc
5. Built-in defaults

Configuration file format: YAML
"""

import copy
import logging
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Optional

from .components.errors import ConfigError
from .components.landau import ELECTRON_CHARGE_ESU, ELECTRON_MASS_G

try:
    import yaml  # type: ignore[import-untyped]

    YAML_AVAILABLE = True
except ImportError:
    YAML_AVAILABLE = False

logger = logging.getLogger(__name__)

CONFIG_FILENAME = ".diracrc"
CONFIG_ENV_VAR = "DIRAC_VERIFY_CONFIG"

KS_MODES = ("hopf-normalized", "paper-literal")
LC_MOMENTA_MODES = ("as-printed", "canonical")
OUTPUT_FORMATS = ("text", "json")
SUITE_NAMES = (
    "weyl",
    "landau",
    "jordan",
    "tkk",
    "hydrogen",
    "spinor",
    "transforms",
)


class VerifyConfig:
    """Configuration manager for the verification runner."""

    DEFAULTS = {
        "suite": {
            "seed": 42,
            "trials": 32,
            "fock_cutoff_2mode": 12,
            "fock_cutoff_4mode": 6,
            "tolerance_numeric": 1e-10,
            "tolerance_eigen": 1e-8,
            "ks_mode": "hopf-normalized",
            "lc_momenta": "as-printed",
            "output": "text",
            "workers": 4,
        },
        "landau": {
            "field_gauss": 1.0e5,
            "mass_g": ELECTRON_MASS_G,
            "charge_esu": ELECTRON_CHARGE_ESU,
            "spectrum_cutoff": 12,
        },
        "paths": {
            "log_location": "~/.dirac_verify_logs",
            "report_dir": ".",
        },
        "report": {
            "colors": {
                "pass": "green",
                "fail": "bold red",
                "expected-fail": "yellow",
            },
            "show_notes": True,
        },
    }

    def __init__(self, config_path: Optional[Path] = None):
        """
        Initialize configuration.

        Args:
            config_path: Optional explicit config file path
        """
        self.config = self._load_config(config_path)

    def _load_config(self, explicit_path: Optional[Path] = None) -> dict[str, Any]:
        """
        Load configuration with hierarchical precedence.

        Args:
            explicit_path: Explicit config file path (highest priority)

        Returns:
            Merged configuration dictionary
        """
        config = self._deep_copy(self.DEFAULTS)

        if not YAML_AVAILABLE:
            return config

        # Lowest priority first; later files override earlier ones
        config_files = []

        global_config = Path.home() / CONFIG_FILENAME
        if global_config.exists():
            config_files.append(global_config)

        for i in range(4):
            if i == 0:
                project_config = Path.cwd() / CONFIG_FILENAME
            else:
                try:
                    project_config = Path.cwd().parents[i - 1] / CONFIG_FILENAME
                except IndexError:
                    break

            if project_config.exists():
                if project_config != global_config:
                    config_files.append(project_config)
                break

        env_path = os.environ.get(CONFIG_ENV_VAR)
        if env_path:
            env_config = self.expand_path(env_path)
            if env_config.exists():
                config_files.append(env_config)
            else:
                logger.warning(f"{CONFIG_ENV_VAR} points to missing file {env_config}")

        if explicit_path and explicit_path.exists():
            config_files.append(explicit_path)

        for config_file in config_files:
            try:
                with open(config_file) as f:
                    user_config = yaml.safe_load(f) or {}
                if not isinstance(user_config, dict):
                    raise ValueError("top level must be a mapping")
                config = self._merge_config(config, user_config)
            except Exception as e:
                logger.warning(f"Failed to load config from {config_file}: {e}")

        return config

    def _deep_copy(self, d: dict) -> dict:
        """Deep copy a dictionary."""
        return copy.deepcopy(d)

    def _merge_config(self, base: dict, override: dict) -> dict:
        """
        Recursively merge override config into base config.

        Args:
            base: Base configuration
            override: Override configuration

        Returns:
            Merged configuration
        """
        result = self._deep_copy(base)

        for key, value in override.items():
            # None means "not set"
            if value is None:
                continue

            if (
                key in result
                and isinstance(result[key], dict)
                and isinstance(value, dict)
            ):
                result[key] = self._merge_config(result[key], value)
            else:
                result[key] = value

        return result

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value.

        Args:
            key: Dot-notation config key (e.g., 'suite.seed')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        value = self._get_nested(self.config, key)
        return value if value is not None else default

    def _get_nested(self, d: dict, key: str) -> Any:
        keys = key.split(".")
        current = d

        for k in keys:
            if isinstance(current, dict) and k in current:
                current = current[k]
            else:
                return None

        return current

    def get_section(self, section: str) -> dict[str, Any]:
        """
        Get entire configuration section.

        Args:
            section: Section name (e.g., 'suite', 'landau')

        Returns:
            Configuration section dictionary
        """
        return self._deep_copy(self.config.get(section, {}))

    def set(self, key: str, value: Any):
        """
        Set configuration value (runtime only, not persisted).

        Args:
            key: Dot-notation config key
            value: Value to set
        """
        keys = key.split(".")
        target = self.config

        for k in keys[:-1]:
            if k not in target or not isinstance(target[k], dict):
                target[k] = {}
            target = target[k]

        target[keys[-1]] = value

    def expand_path(self, path: str) -> Path:
        """
        Expand path with ~ and environment variables.

        Args:
            path: Path string potentially with ~ or $VAR

        Returns:
            Expanded Path object
        """
        return Path(os.path.expanduser(os.path.expandvars(path)))

    def suite_config(self, suites: Optional[list[str]] = None) -> "SuiteConfig":
        """Validated, frozen view of the ``suite`` section."""
        return SuiteConfig.from_section(self.get_section("suite"), suites)


@dataclass(frozen=True)
class SuiteConfig:
    """Settings handed to every check."""

    seed: int = 42
    trials: int = 32
    fock_cutoff_2mode: int = 12
    fock_cutoff_4mode: int = 6
    tolerance_numeric: float = 1e-10
    tolerance_eigen: float = 1e-8
    ks_mode: str = "hopf-normalized"
    lc_momenta: str = "as-printed"
    output: str = "text"
    workers: int = 4
    suites: tuple[str, ...] = field(default=SUITE_NAMES)

    def __post_init__(self) -> None:
        for name in (
            "seed",
            "trials",
            "fock_cutoff_2mode",
            "fock_cutoff_4mode",
            "workers",
        ):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"suite.{name} must be an integer, got {value!r}")
        for name in ("trials", "fock_cutoff_2mode", "fock_cutoff_4mode", "workers"):
            if getattr(self, name) < 1:
                raise ConfigError(f"suite.{name} must be positive")
        if self.fock_cutoff_2mode < 2 or self.fock_cutoff_4mode < 2:
            raise ConfigError("Fock cutoffs must be at least 2")
        for name in ("tolerance_numeric", "tolerance_eigen"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"suite.{name} must be positive")
        if self.ks_mode not in KS_MODES:
            raise ConfigError(
                f"Unknown ks_mode {self.ks_mode!r}; use one of {KS_MODES}"
            )
        if self.lc_momenta not in LC_MOMENTA_MODES:
            raise ConfigError(
                f"Unknown lc_momenta {self.lc_momenta!r}; use one of {LC_MOMENTA_MODES}"
            )
        if self.output not in OUTPUT_FORMATS:
            raise ConfigError(f"Unknown output format {self.output!r}")
        unknown = [s for s in self.suites if s not in SUITE_NAMES]
        if unknown:
            raise ConfigError(f"Unknown suites: {', '.join(unknown)}")

    @classmethod
    def from_section(
        cls, section: dict[str, Any], suites: Optional[list[str]] = None
    ) -> "SuiteConfig":
        """Build from a ``suite`` config section, ignoring unknown keys."""
        known = {f for f in cls.__dataclass_fields__ if f != "suites"}
        extra = sorted(set(section) - known)
        if extra:
            logger.warning(f"Ignoring unknown suite settings: {', '.join(extra)}")
        kwargs = {k: v for k, v in section.items() if k in known}
        try:
            for name in ("tolerance_numeric", "tolerance_eigen"):
                if name in kwargs:
                    kwargs[name] = float(kwargs[name])
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid tolerance: {e}") from e
        if suites:
            kwargs["suites"] = tuple(suites)
        return cls(**kwargs)

    def with_overrides(self, **overrides: Any) -> "SuiteConfig":
        """Copy with non-None overrides applied (validation reruns)."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "fock_cutoff_2mode": self.fock_cutoff_2mode,
            "fock_cutoff_4mode": self.fock_cutoff_4mode,
            "tolerance_numeric": self.tolerance_numeric,
            "tolerance_eigen": self.tolerance_eigen,
            "ks_mode": self.ks_mode,
            "lc_momenta": self.lc_momenta,
            "suites": list(self.suites),
        }


# Global config instance (lazy loaded)
_global_config: Optional[VerifyConfig] = None


def initialize_default_config() -> Path:
    """
    Create default ~/.diracrc configuration file if it doesn't exist.

    Returns:
        Path to the config file
    """
    config_file = Path.home() / CONFIG_FILENAME

    if config_file.exists():
        return config_file

    default_config = """# dirac-landau-verify configuration
#
# This file was automatically created with the built-in defaults.
#
# Format: YAML
# Precedence: --config > $DIRAC_VERIFY_CONFIG > project .diracrc > ~/.diracrc > defaults

# ============================================================================
# SUITE - What to check and how strictly
# ============================================================================
suite:
  seed: 42                     # Seed for sampled tuples and phase-space points
  trials: 32                   # Random samples per property check
  fock_cutoff_2mode: 12        # Quanta per mode for two-mode numeric checks
  fock_cutoff_4mode: 6         # Quanta per mode for four-mode numeric checks
  tolerance_numeric: 1.0e-10   # Numeric identity tolerance
  tolerance_eigen: 1.0e-8      # Eigenvalue clustering tolerance
  ks_mode: hopf-normalized     # hopf-normalized | paper-literal
  lc_momenta: as-printed       # as-printed | canonical
  output: text                 # text | json
  workers: 4                   # Concurrent checks

# ============================================================================
# LANDAU - Physical frame for reported energies (Gaussian units)
# ============================================================================
landau:
  field_gauss: 100000.0        # Gauss
  # mass_g: 9.1093837e-28      # Electron mass by default
  # charge_esu: 4.8032047e-10  # Electron charge by default
  spectrum_cutoff: 12

# ============================================================================
# PATHS - File system locations
# ============================================================================
paths:
  log_location: ~/.dirac_verify_logs
  report_dir: .

# ============================================================================
# REPORT - Text report styling (rich style names)
# ============================================================================
report:
  colors:
    pass: green
    fail: bold red
    expected-fail: yellow
  show_notes: true
"""

    try:
        with open(config_file, "w") as f:
            f.write(default_config)
    except Exception as e:
        # Built-in defaults still apply
        logger.debug(f"Could not write {config_file}: {e}")

    return config_file


def get_config(
    config_path: Optional[Path] = None, reload: bool = False
) -> VerifyConfig:
    """
    Get global configuration instance.

    Args:
        config_path: Optional explicit config file path
        reload: Force reload configuration

    Returns:
        VerifyConfig instance
    """
    global _global_config

    if _global_config is None or reload:
        if config_path is None:
            initialize_default_config()

        _global_config = VerifyConfig(config_path)

    return _global_config
