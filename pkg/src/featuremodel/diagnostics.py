"""
Diagnostics reported by model validation and JSON import
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional

from featuremodel.model import SourceSpan


class Severity(Enum):
    """Diagnostic severity levels"""

    ERROR = "error"
    WARNING = "warning"


class DiagnosticCode(Enum):
    """Stable identifiers for every kind of model problem"""

    CYCLE = "CYCLE"
    UNRESOLVED = "UNRESOLVED"
    DUPLICATE_FEATURE = "DUPLICATE_FEATURE"
    DUPLICATE_ATTRIBUTE = "DUPLICATE_ATTRIBUTE"
    DUPLICATE_CHILD = "DUPLICATE_CHILD"
    SELF_REFERENCE = "SELF_REFERENCE"
    MULTIPLE_GROUPS = "MULTIPLE_GROUPS"
    MALFORMED_DECOMPOSITION = "MALFORMED_DECOMPOSITION"
    EMPTY_ATTRIBUTE = "EMPTY_ATTRIBUTE"
    CASE_COLLISION = "CASE_COLLISION"
    IMPLY_CYCLE = "IMPLY_CYCLE"
    INVALID_NAME = "INVALID_NAME"
    SCHEMA = "SCHEMA"


@dataclass(frozen=True)
class Diagnostic:
    """A single problem found in a model or an interchange document"""

    severity: Severity
    code: DiagnosticCode
    message: str
    feature: Optional[str] = None
    span: Optional[SourceSpan] = None
    path: Optional[str] = None

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def format(self, source: str = "<input>") -> str:
        """Render as `<file>:<line>:<col>: <severity>: <message>`"""
        line, column = (self.span.line, self.span.column) if self.span else (1, 1)
        return f"{source}:{line}:{column}: {self.severity.value}: {self.message}"

    def to_dict(self) -> dict:
        return {
            "severity": self.severity.value,
            "code": self.code.value,
            "message": self.message,
            "feature": self.feature,
            "path": self.path,
            "line": self.span.line if self.span else None,
            "column": self.span.column if self.span else None,
        }


def errors_only(diagnostics: Iterable[Diagnostic]) -> List[Diagnostic]:
    return [d for d in diagnostics if d.is_error]
