"""
Oracle budgets.

Exhaustive searches (witness scan, Buchberger pairs, Hochster subsets) are
bounded by a Budgets record. Defaults can be overridden from a YAML file and
from the MONOIDEAL_BUDGET environment variable, which holds either a path to
a YAML file or an inline YAML mapping.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, fields, replace
from enum import Enum
from pathlib import Path
from typing import Any

import yaml

from .errors import ConfigurationError

logger = logging.getLogger(__name__)

BUDGET_ENV_VAR = "MONOIDEAL_BUDGET"


class Field(str, Enum):
    """Coefficient fields for simplicial homology."""
    QQ = "QQ"
    GF2 = "GF2"


@dataclass(frozen=True)
class Budgets:
    """
    Limits for the exhaustive oracles.

    Attributes:
        witness_candidates: Max monomials scanned by the brute-force Ass oracle
        buchberger_pairs: Max S-pairs processed by one Buchberger run
        polarized_variables: Max variables of the polarization fed to Hochster
        field: Coefficient field used by the homology oracle
    """

    witness_candidates: int = 2**24
    buchberger_pairs: int = 10**5
    polarized_variables: int = 22
    field: Field = Field.QQ

    def updated(self, overrides: dict[str, Any]) -> Budgets:
        """Return a copy with the given keys replaced, validating each value."""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ConfigurationError(f"unknown budget keys: {', '.join(sorted(unknown))}")

        clean: dict[str, Any] = {}
        for key, value in overrides.items():
            if key == "field":
                try:
                    clean[key] = Field(str(value).upper())
                except ValueError as e:
                    raise ConfigurationError(f"unsupported field {value!r}") from e
                continue
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise ConfigurationError(f"budget {key} must be a positive integer, got {value!r}")
            clean[key] = value
        return replace(self, **clean)


def _read_mapping(source: str) -> dict[str, Any]:
    path = Path(source)
    try:
        is_file = path.is_file()
    except OSError:
        # Inline mappings can be longer than a legal file name
        is_file = False
    try:
        text = path.read_text() if is_file else source
    except OSError as e:
        raise ConfigurationError(f"cannot read budget file {source}: {e}") from e
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ConfigurationError(f"invalid budget YAML: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError("budget configuration must be a mapping")
    return data


def load_budgets(path: str | Path | None = None) -> Budgets:
    """Load budgets from defaults, an optional YAML file and the environment.

    Args:
        path: Optional YAML file with budget keys

    Returns:
        Budgets with file values applied first and MONOIDEAL_BUDGET last
    """
    budgets = Budgets()
    if path is not None:
        budgets = budgets.updated(_read_mapping(str(path)))
        logger.debug("Loaded budgets from %s", path)

    env_value = os.environ.get(BUDGET_ENV_VAR)
    if env_value:
        budgets = budgets.updated(_read_mapping(env_value))
        logger.debug("Applied %s overrides: %s", BUDGET_ENV_VAR, budgets)
    return budgets
