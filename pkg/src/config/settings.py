"""
Settings resolution for fmre

Precedence, lowest first: built-in defaults, the user file
(~/.config/fmre/config.yaml), the project file (.fmre.yaml or .fmre.json in
the working directory), FMRE_* environment variables, command-line flags.
"""

import os
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

from config.config_manager import (
    FMRE_SCHEMA,
    ConfigError,
    ConfigSchema,
    load_config_file,
)
from utils.logger import get_logger

PROJECT_FILES = (".fmre.yaml", ".fmre.yml", ".fmre.json")

ENVIRONMENT = {
    "FMRE_COLOR": "color",
    "FMRE_LOG_LEVEL": "log_level",
}


class Settings:
    """Resolved fmre settings"""

    def __init__(
        self,
        overrides: Optional[Mapping[str, Any]] = None,
        cwd: Optional[Path] = None,
        environ: Optional[Mapping[str, str]] = None,
        user_dir: Optional[Path] = None,
        schema: ConfigSchema = FMRE_SCHEMA,
    ):
        self.logger = get_logger(__name__)
        self.schema = schema
        self.cwd = Path(cwd) if cwd else Path.cwd()
        self.environ = os.environ if environ is None else environ
        self.user_dir = Path(user_dir) if user_dir else self._get_settings_dir()
        self.sources: List[str] = ["defaults"]

        self.settings: Dict[str, Any] = schema.defaults()
        for path in self.candidate_files():
            self._merge_file(path)
        self._merge_environment()
        self._merge(
            {k: v for k, v in (overrides or {}).items() if v is not None}, "command line"
        )

    def _get_settings_dir(self) -> Path:
        """Get the settings directory path"""
        base = self.environ.get("XDG_CONFIG_HOME")
        return (Path(base) if base else Path.home() / ".config") / "fmre"

    def candidate_files(self) -> List[Path]:
        files = [self.user_dir / "config.yaml"]
        for name in PROJECT_FILES:
            path = self.cwd / name
            if path.is_file():
                files.append(path)
                break
        return files

    def _merge_file(self, path: Path):
        if not path.is_file():
            return
        try:
            data = load_config_file(path, self.schema)
        except (ConfigError, OSError) as e:
            self.logger.warning(f"Ignoring configuration file: {e}")
            return
        self._merge(data, str(path))

    def _merge_environment(self):
        values = {}
        for variable, key in ENVIRONMENT.items():
            value = self.environ.get(variable)
            if value:
                values[key] = value.upper() if key == "log_level" else value.lower()
        self._merge(values, "environment")

    def _merge(self, values: Mapping[str, Any], source: str):
        if not values:
            return
        errors = self.schema.validate(dict(values))
        if errors:
            self.logger.warning(f"Ignoring settings from {source}: {'; '.join(errors)}")
            return
        self.settings.update(values)
        self.sources.append(source)

    def get(self, key: str, default: Any = None) -> Any:
        """Get a setting value"""
        return self.settings.get(key, default)

    def __getitem__(self, key: str) -> Any:
        return self.settings[key]

    @property
    def color(self) -> bool:
        return self.settings["color"] != "never"

    def as_dict(self) -> Dict[str, Any]:
        return dict(self.settings)
