"""
Feature pattern recognition and feature type mining
"""

from .patterns import (
    FeatureKind,
    FeaturePattern,
    PatternKind,
    PATTERNS,
    match_pattern,
    recognize,
)
from .mining import (
    Meaning,
    Recognition,
    classify_model,
    configuration_features,
    feature_type_mining,
)
from .report import format_classification, format_meaning

__all__ = [
    "FeatureKind",
    "FeaturePattern",
    "PatternKind",
    "PATTERNS",
    "match_pattern",
    "recognize",
    "Meaning",
    "Recognition",
    "classify_model",
    "configuration_features",
    "feature_type_mining",
    "format_classification",
    "format_meaning",
]
