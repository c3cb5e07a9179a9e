"""
Configuration loading: CLI flags > CONCAVITY_CONFIG file > defaults
"""

import os
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

from dotenv import dotenv_values, load_dotenv
import structlog

from .errors import InvalidParameter

logger = structlog.get_logger()

# Load environment variables
load_dotenv()

CONFIG_ENV_VAR = 'CONCAVITY_CONFIG'


@dataclass(frozen=True)
class Settings:
    """Numerical defaults shared by every service"""

    truncation_order: int = 64
    evaluation_radius: float = 0.95
    circle_samples: int = 2048
    bisection_tol: float = 1e-9
    scan_step: float = 1e-3
    witness_seed: int = 7
    max_blaschke_zeros: int = 4
    blaschke_radius: float = 0.9
    rotation_count: int = 16
    log_level: str = 'WARNING'


# key in the config file -> Settings field
_FILE_KEYS = {
    'TRUNCATION_ORDER': 'truncation_order',
    'EVALUATION_RADIUS': 'evaluation_radius',
    'CIRCLE_SAMPLES': 'circle_samples',
    'BISECTION_TOL': 'bisection_tol',
    'SCAN_STEP': 'scan_step',
    'WITNESS_SEED': 'witness_seed',
    'MAX_BLASCHKE_ZEROS': 'max_blaschke_zeros',
    'BLASCHKE_RADIUS': 'blaschke_radius',
    'ROTATION_COUNT': 'rotation_count',
    'CONCAVITY_LOG_LEVEL': 'log_level',
}

DEFAULTS = Settings()


def _coerce(name: str, raw: Any) -> Any:
    field_type = {f.name: f.type for f in fields(Settings)}[name]
    try:
        if field_type in (int, 'int'):
            return int(raw)
        if field_type in (float, 'float'):
            return float(raw)
        return str(raw)
    except (TypeError, ValueError):
        raise InvalidParameter(name, f"cannot parse {raw!r}")


def load_settings(overrides: Optional[Dict[str, Any]] = None) -> Settings:
    """
    Build the effective settings

    Args:
        overrides: values coming from command-line flags (None entries ignored)

    Returns:
        Settings with flags applied over the config file over the defaults
    """
    values: Dict[str, Any] = {}

    config_path = os.getenv(CONFIG_ENV_VAR)
    if config_path:
        if not os.path.exists(config_path):
            logger.warning("Config file not found", path=config_path)
        else:
            for key, raw in dotenv_values(config_path).items():
                name = _FILE_KEYS.get(key.upper())
                if name is None:
                    logger.warning("Unknown config key ignored", key=key, path=config_path)
                    continue
                values[name] = _coerce(name, raw)

    if 'CONCAVITY_LOG_LEVEL' in os.environ and 'log_level' not in values:
        values['log_level'] = os.environ['CONCAVITY_LOG_LEVEL']

    for name, value in (overrides or {}).items():
        if value is not None:
            values[name] = _coerce(name, value)

    settings = replace(DEFAULTS, **values)
    logger.debug("Settings loaded", **{f.name: getattr(settings, f.name) for f in fields(settings)})
    return settings
