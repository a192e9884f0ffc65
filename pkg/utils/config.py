"""
Configuration for the command line
Defaults come from the environment (a .env file is honoured); flags override them.
"""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from utils.errors import ConfigError, GenusOutOfRange

load_dotenv()

FORMATS = ("plain", "json", "csv")
SIGN_CONVENTIONS = ("consistent", "paper_literal")


def normalize_convention(text: str) -> str:
    """Canonical convention name; "paper-literal" is accepted for "paper_literal" """
    convention = text.strip().lower().replace("-", "_")
    if convention not in SIGN_CONVENTIONS:
        raise ConfigError(f"Unknown sign convention {text!r}")
    return convention


def _env_bool(name: str, default: bool = False) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


def _env_number(name: str, default, cast):
    value = os.getenv(name)
    if value is None or not value.strip():
        return default
    try:
        return cast(value)
    except ValueError:
        raise ConfigError(f"Environment variable {name}={value!r} is not a valid {cast.__name__}")


@dataclass
class CliConfig:
    genus: int = 1
    sign_convention: str = "consistent"
    format: str = "plain"
    strict: bool = False
    seed: int = 0
    samples: int = 100
    tol: float = 1e-12
    jobs: int = 1
    handle: Optional[int] = None

    @classmethod
    def from_env(cls) -> "CliConfig":
        """Defaults as set by MODULI_* environment variables"""
        return cls(
            sign_convention=normalize_convention(os.getenv("MODULI_SIGN_CONVENTION", "consistent")),
            format=os.getenv("MODULI_FORMAT", "plain"),
            strict=_env_bool("MODULI_STRICT"),
            seed=_env_number("MODULI_SEED", 0, int),
            samples=_env_number("MODULI_SAMPLES", 100, int),
            tol=_env_number("MODULI_TOL", 1e-12, float),
            jobs=_env_number("MODULI_JOBS", 1, int),
        )

    def validate(self) -> "CliConfig":
        if self.genus < 1:
            raise GenusOutOfRange(f"Genus must be at least 1, got {self.genus}")
        if self.samples < 1:
            raise ConfigError(f"samples must be at least 1, got {self.samples}")
        if not self.tol > 0:
            raise ConfigError(f"tol must be positive, got {self.tol}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be at least 1, got {self.jobs}")
        if self.sign_convention not in SIGN_CONVENTIONS:
            raise ConfigError(f"sign convention must be one of {', '.join(SIGN_CONVENTIONS)}, "
                              f"got {self.sign_convention!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")
        return self
