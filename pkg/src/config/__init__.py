"""
Configuration loading for fmre
"""

from .config_manager import (
    ConfigCorruptionError,
    ConfigError,
    ConfigSchema,
    FMRE_SCHEMA,
    SchemaValidationError,
    load_config_file,
)
from .settings import Settings

__all__ = [
    "ConfigCorruptionError",
    "ConfigError",
    "ConfigSchema",
    "FMRE_SCHEMA",
    "SchemaValidationError",
    "Settings",
    "load_config_file",
]
