"""
Exception hierarchy for feature model processing
"""

from typing import List, Optional, Sequence, TYPE_CHECKING

if TYPE_CHECKING:
    from featuremodel.diagnostics import Diagnostic


class FmError(Exception):
    """Base exception for all feature model errors"""

    code = "FM_ERROR"

    def __init__(self, message: str, code: Optional[str] = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class UnknownFeatureError(FmError):
    """Raised when a feature name does not resolve in a model"""

    code = "UNKNOWN_FEATURE"

    def __init__(self, name: str, model_name: Optional[str] = None):
        where = f" in model {model_name}" if model_name else ""
        super().__init__(f"unknown feature '{name}'{where}")
        self.name = name


class SliceQueryError(FmError):
    """Raised when a slicing criterion is malformed"""

    ALTERNATIVES_WITH_AND = "ALTERNATIVES_WITH_AND"
    ALTERNATIVE_EQUALS_FEATURE = "ALTERNATIVE_EQUALS_FEATURE"
    UNKNOWN_ALTERNATIVE = "UNKNOWN_ALTERNATIVE"

    def __init__(self, message: str, code: str):
        super().__init__(message, code)


class ModelValidationError(FmError):
    """Raised by strict entry points when a model has ERROR diagnostics"""

    code = "INVALID_MODEL"

    def __init__(self, diagnostics: Sequence["Diagnostic"]):
        self.diagnostics: List["Diagnostic"] = list(diagnostics)
        first = self.diagnostics[0].message if self.diagnostics else "invalid model"
        extra = len(self.diagnostics) - 1
        suffix = f" (+{extra} more)" if extra > 0 else ""
        super().__init__(f"{first}{suffix}")


class SchemaError(FmError):
    """Raised when a JSON document does not match the model schema"""

    code = "SCHEMA"

    def __init__(self, diagnostics: Sequence["Diagnostic"]):
        self.diagnostics: List["Diagnostic"] = list(diagnostics)
        super().__init__("; ".join(d.message for d in self.diagnostics) or "schema error")


class ModelParseError(FmError):
    """Raised when `.fm` text has syntax errors; carries every ParseError found"""

    code = "PARSE_ERROR"

    def __init__(self, errors: Sequence[Exception]):
        self.errors = list(errors)
        first = str(self.errors[0]) if self.errors else "parse error"
        extra = len(self.errors) - 1
        suffix = f" (+{extra} more)" if extra > 0 else ""
        super().__init__(f"{first}{suffix}")
