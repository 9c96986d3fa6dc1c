"""
Feature model core: domain types, typed dependency graph and validation
"""

from .model import (
    Attribute,
    Constraint,
    ConstraintKind,
    Decomposition,
    DecompositionKind,
    Feature,
    FeatureModel,
    SourceSpan,
)
from .errors import (
    FmError,
    ModelParseError,
    ModelValidationError,
    SchemaError,
    SliceQueryError,
    UnknownFeatureError,
)
from .diagnostics import Diagnostic, DiagnosticCode, Severity
from .graph import EdgeLabel, FeatureGraph, ancestors, build_graph, dependents, descendants
from .validation import ensure_valid, validate

__all__ = [
    "Attribute",
    "Constraint",
    "ConstraintKind",
    "Decomposition",
    "DecompositionKind",
    "Feature",
    "FeatureModel",
    "SourceSpan",
    "FmError",
    "ModelParseError",
    "ModelValidationError",
    "SchemaError",
    "SliceQueryError",
    "UnknownFeatureError",
    "Diagnostic",
    "DiagnosticCode",
    "Severity",
    "EdgeLabel",
    "FeatureGraph",
    "ancestors",
    "build_graph",
    "dependents",
    "descendants",
    "ensure_valid",
    "validate",
]
