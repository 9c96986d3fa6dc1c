"""
Error handling framework for fmre
Classifies exceptions, maps them to exit statuses and user messages, and
writes a structured record of every handled error
"""

import json
import logging
import traceback
import uuid
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum, IntEnum
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from config.config_manager import ConfigError
from featuremodel.errors import (
    FmError,
    ModelParseError,
    ModelValidationError,
    SchemaError,
    SliceQueryError,
)
from utils.logger import ROOT_LOGGER


class ExitStatus(IntEnum):
    """Process exit codes"""

    OK = 0
    INPUT_ERROR = 1
    USAGE_ERROR = 2


class ErrorCategory(Enum):
    """Error categorization"""

    USAGE = "usage"
    MODEL = "model"
    IO = "io"
    INTERNAL = "internal"


EXIT_STATUS: Dict[ErrorCategory, ExitStatus] = {
    ErrorCategory.USAGE: ExitStatus.USAGE_ERROR,
    ErrorCategory.MODEL: ExitStatus.INPUT_ERROR,
    ErrorCategory.IO: ExitStatus.USAGE_ERROR,
    ErrorCategory.INTERNAL: ExitStatus.INPUT_ERROR,
}

USAGE_QUERY_CODES = (
    SliceQueryError.ALTERNATIVES_WITH_AND,
    SliceQueryError.ALTERNATIVE_EQUALS_FEATURE,
)


@dataclass
class ErrorContext:
    """Contextual information about an error"""

    correlation_id: str = field(default_factory=lambda: str(uuid.uuid4()))
    timestamp: datetime = field(default_factory=datetime.now)
    command: Optional[str] = None
    path: Optional[str] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {
            "correlation_id": self.correlation_id,
            "timestamp": self.timestamp.isoformat(),
            "command": self.command,
            "path": self.path,
            "metadata": self.metadata,
        }


@dataclass
class ErrorInfo:
    """Everything known about one handled error"""

    error: Exception
    category: ErrorCategory
    context: ErrorContext
    exit_status: ExitStatus = ExitStatus.INPUT_ERROR
    user_message: str = ""
    stacktrace: Optional[str] = None

    def __post_init__(self):
        if self.stacktrace is None and self.error.__traceback__ is not None:
            lines = traceback.format_exception(
                type(self.error), self.error, self.error.__traceback__
            )
            self.stacktrace = "".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {
            "error_type": type(self.error).__name__,
            "error_code": getattr(self.error, "code", None),
            "error_message": str(self.error),
            "category": self.category.value,
            "exit_status": int(self.exit_status),
            "context": self.context.to_dict(),
            "user_message": self.user_message,
            "stacktrace": self.stacktrace,
        }


Rule = Tuple[Callable[[Exception], bool], ErrorCategory]


class ErrorClassifier:
    """Classifies errors into categories; first matching rule wins"""

    def __init__(self):
        self.rules: List[Rule] = []
        self._setup_default_rules()

    def _setup_default_rules(self):
        """Setup default classification rules"""
        self.add_rule(
            lambda e: isinstance(e, SliceQueryError) and e.code in USAGE_QUERY_CODES,
            ErrorCategory.USAGE,
        )
        self.add_rule(lambda e: isinstance(e, ConfigError), ErrorCategory.USAGE)
        self.add_rule(lambda e: isinstance(e, FmError), ErrorCategory.MODEL)
        self.add_rule(
            lambda e: isinstance(e, (OSError, UnicodeDecodeError)), ErrorCategory.IO
        )

    def add_rule(self, condition: Callable[[Exception], bool], category: ErrorCategory):
        """Add a classification rule"""
        self.rules.append((condition, category))

    def classify(self, error: Exception) -> ErrorCategory:
        """Classify an error"""
        for condition, category in self.rules:
            try:
                if condition(error):
                    return category
            except Exception:
                continue
        return ErrorCategory.INTERNAL


class UserMessageFormatter:
    """Formats error messages for the terminal"""

    def __init__(self):
        self.templates = {
            ErrorCategory.USAGE: "error: {message}",
            ErrorCategory.MODEL: "error: {message}",
            ErrorCategory.IO: "error: cannot read {path}: {message}",
            ErrorCategory.INTERNAL: "internal error: {message}",
        }

    def format_message(self, error_info: ErrorInfo) -> str:
        """Format a one-line (or per-problem multi-line) message"""
        error = error_info.error
        path = error_info.context.path or "<input>"

        if isinstance(error, ModelParseError):
            return "\n".join(e.format(path) for e in error.errors)  # type: ignore[attr-defined]
        if isinstance(error, (ModelValidationError, SchemaError)):
            return "\n".join(
                d.format(path) if d.path is None else f"{path}: error: {d.path}: {d.message}"
                for d in error.diagnostics
            )

        if isinstance(error, OSError) and error.strerror:
            message = error.strerror
        elif isinstance(error, UnicodeDecodeError):
            message = "not valid UTF-8"
        else:
            message = str(error) or type(error).__name__
        return self.templates[error_info.category].format(message=message, path=path)


class StructuredFormatter(logging.Formatter):
    """Custom formatter for structured JSON logs"""

    def format(self, record):
        if hasattr(record, "structured_data"):
            return json.dumps(record.structured_data)
        return super().format(record)


class StructuredLogger:
    """JSON-lines record of handled errors; silent unless a log file is given"""

    def __init__(self, name: str = f"{ROOT_LOGGER}.errors", log_file: Optional[Path] = None):
        self.logger = logging.getLogger(name)
        self.logger.propagate = False
        self.logger.setLevel(logging.DEBUG)
        for old in list(self.logger.handlers):
            self.logger.removeHandler(old)
            old.close()

        if log_file:
            path = Path(log_file).expanduser()
            path.parent.mkdir(parents=True, exist_ok=True)
            handler: logging.Handler = logging.FileHandler(path, encoding="utf-8")
            handler.setFormatter(StructuredFormatter())
        else:
            handler = logging.NullHandler()
        self.logger.addHandler(handler)

    def log_error(self, error_info: ErrorInfo):
        """Log structured error information"""
        log_data = {
            "type": "error",
            "data": error_info.to_dict(),
            "timestamp": datetime.now().isoformat(),
        }
        self.logger.error(json.dumps(log_data), extra={"structured_data": log_data})


class ErrorHandler:
    """Turns exceptions raised by commands into messages and exit statuses"""

    def __init__(self, log_file: Optional[Union[str, Path]] = None):
        self.classifier = ErrorClassifier()
        self.message_formatter = UserMessageFormatter()
        self.logger = StructuredLogger(log_file=Path(log_file) if log_file else None)
        self.handled: List[ErrorInfo] = []

    def handle_error(
        self,
        error: Exception,
        category: Optional[ErrorCategory] = None,
        command: Optional[str] = None,
        path: Optional[str] = None,
        **metadata,
    ) -> ErrorInfo:
        """Main error handling method"""
        category = category or self.classifier.classify(error)
        error_info = ErrorInfo(
            error=error,
            category=category,
            context=ErrorContext(command=command, path=path, metadata=metadata),
            exit_status=EXIT_STATUS[category],
        )
        error_info.user_message = self.message_formatter.format_message(error_info)

        self.logger.log_error(error_info)
        self.handled.append(error_info)
        if category is ErrorCategory.INTERNAL:
            logging.getLogger(ROOT_LOGGER).debug(error_info.stacktrace or "")
        return error_info
