"""
Configuration schema and file loading
Validates settings files against a typed schema before they are merged
"""

import json
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List

import yaml

from utils.logger import get_logger

logger = get_logger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class ConfigError(Exception):
    """Base exception for configuration errors"""

    pass


class ConfigCorruptionError(ConfigError):
    """Raised when a configuration file cannot be decoded"""

    pass


class SchemaValidationError(ConfigError):
    """Raised when configuration doesn't match schema"""

    def __init__(self, errors: List[str], source: str = "configuration"):
        self.errors = list(errors)
        super().__init__(f"Invalid {source}: " + "; ".join(self.errors))


@dataclass
class ConfigSchema:
    """Configuration schema definition"""

    version: str
    fields: Dict[str, Dict[str, Any]]
    required: List[str] = field(default_factory=list)

    def validate(self, data: Dict[str, Any]) -> List[str]:
        """Validate data against schema, returns list of errors"""
        errors = []

        for field_name in self.required:
            if field_name not in data:
                errors.append(f"Required field '{field_name}' is missing")

        for field_name in data:
            if field_name not in self.fields:
                errors.append(f"Unknown field '{field_name}'")

        for field_name, field_spec in self.fields.items():
            if field_name not in data:
                continue
            value = data[field_name]
            expected_type = field_spec.get("type")

            # bool is an int subclass; keep them apart
            if expected_type and (
                not isinstance(value, expected_type)
                or (expected_type is not bool and isinstance(value, bool))
            ):
                errors.append(
                    f"Field '{field_name}' has wrong type. "
                    f"Expected {expected_type.__name__}, got {type(value).__name__}"
                )
                continue

            if "enum" in field_spec and value not in field_spec["enum"]:
                errors.append(
                    f"Field '{field_name}' has invalid value. Must be one of {field_spec['enum']}"
                )

        return errors

    def defaults(self) -> Dict[str, Any]:
        return {name: spec["default"] for name, spec in self.fields.items()}


FMRE_SCHEMA = ConfigSchema(
    version="1",
    fields={
        "color": {"type": str, "enum": ["never", "auto"], "default": "auto"},
        "log_level": {"type": str, "enum": LOG_LEVELS, "default": "WARNING"},
        "log_file": {"type": str, "default": ""},
        "slice_format": {"type": str, "enum": ["fm", "dot", "json"], "default": "fm"},
        "export_format": {"type": str, "enum": ["dot", "json"], "default": "json"},
        "fuzzy_names": {"type": bool, "default": True},
    },
)


class StorageAdapter(ABC):
    """Abstract base class for configuration file formats"""

    @abstractmethod
    def load(self, path: Path) -> Dict[str, Any]:
        """Load configuration from storage"""
        pass

    def exists(self, path: Path) -> bool:
        return path.exists() and path.is_file()


class JsonStorageAdapter(StorageAdapter):
    """JSON file storage adapter"""

    def load(self, path: Path) -> Dict[str, Any]:
        try:
            with open(path, "r", encoding="utf-8") as f:
                content = f.read().strip()
            return json.loads(content) if content else {}
        except json.JSONDecodeError as e:
            raise ConfigCorruptionError(f"Invalid JSON in {path}: {e}") from e


class YamlStorageAdapter(StorageAdapter):
    """YAML file storage adapter"""

    def load(self, path: Path) -> Dict[str, Any]:
        try:
            with open(path, "r", encoding="utf-8") as f:
                return yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigCorruptionError(f"Invalid YAML in {path}: {e}") from e


def adapter_for(path: Path) -> StorageAdapter:
    if path.suffix.lower() == ".json":
        return JsonStorageAdapter()
    return YamlStorageAdapter()


def load_config_file(path: Path, schema: ConfigSchema = FMRE_SCHEMA) -> Dict[str, Any]:
    """Load and validate one configuration file"""
    data = adapter_for(path).load(path)
    if not isinstance(data, dict):
        raise ConfigCorruptionError(
            f"Configuration in {path} must be a mapping, got {type(data).__name__}"
        )
    errors = schema.validate(data)
    if errors:
        raise SchemaValidationError(errors, str(path))
    logger.debug(f"Loaded configuration from {path}")
    return data
