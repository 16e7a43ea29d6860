"""Packaged defaults and optional user overrides, read from YAML."""

import os
from fractions import Fraction
from pathlib import Path
from typing import Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .exceptions import InvalidInputError
from .log import get_logger

LOG = get_logger(__name__)

DEFAULTS_FILE_PATH = os.path.join(os.path.dirname(__file__), "defaults.yml")


class Settings(BaseModel):
    """Effective defaults for enumeration bounds and randomized checks."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    max_len: int = Field(12, ge=0, description="Length bound L for Coxeter enumerations.")
    truncate: int = Field(20, ge=1, description="Truncation bound N of the Dirichlet series.")
    random_samples: int = Field(200, ge=1, description="Random cases per Hecke property check.")
    graph_samples: int = Field(50, ge=1, description="Random graphs of groups per sign check.")
    seed: int = Field(20240501, description="Seed for every randomized check.")
    oracle_q: int = Field(2, ge=2, description="Residue cardinality of the finite convolution oracle.")
    check_points: list[str] = Field(
        default_factory=lambda: ["1/2", "1/3", "2"],
        description="Points t where functional equations are also checked numerically.",
    )

    @field_validator("check_points", mode="before")
    @classmethod
    def stringify_points(cls, value):
        return [str(v) for v in value]

    @field_validator("check_points")
    @classmethod
    def points_are_rational(cls, value):
        for point in value:
            Fraction(point)
        return value

    @property
    def points(self) -> list[Fraction]:
        return [Fraction(p) for p in self.check_points]


def _read_yaml(path: str | Path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            content = yaml.safe_load(f) or {}
    except OSError as e:
        raise InvalidInputError(f"cannot read {path}: {e.strerror}") from e
    except yaml.YAMLError as e:
        raise InvalidInputError(f"{path}: invalid YAML: {e}") from e
    if not isinstance(content, dict):
        raise InvalidInputError(f"{path}: configuration must be a mapping")
    return content


def load_settings(path: Optional[str | Path] = None) -> Settings:
    """Load the packaged defaults, overridden by an optional user file.

    Parameters
    ----------
    path : str or Path, optional
        YAML file whose keys override the packaged defaults.

    Returns
    -------
    Settings
        Validated settings.

    Raises
    ------
    InvalidInputError
        If the file is not a mapping or a value fails validation.
    """
    values = _read_yaml(DEFAULTS_FILE_PATH)
    if path is not None:
        LOG.debug(f"Loading configuration overrides from {path}")
        values.update(_read_yaml(path))
    try:
        return Settings(**values)
    except (ValidationError, ValueError, ZeroDivisionError) as e:
        raise InvalidInputError(f"invalid configuration: {e}") from e
