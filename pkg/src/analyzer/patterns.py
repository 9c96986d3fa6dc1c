"""
Feature patterns and the recognizer

A pattern lists the relation clause kinds its grammar can produce. A feature
matches a pattern when every one of its clauses is producible by it.
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Tuple

from featuremodel.model import ConstraintKind, DecompositionKind, Feature


class FeatureKind(Enum):
    """Classification of a feature"""

    ELEMENTARY = "elementary"
    CONFIGURATION = "configuration"

    @property
    def label(self) -> str:
        return f"{self.value.capitalize()} feature"


class PatternKind(Enum):
    """Predefined feature patterns"""

    ELEMENTARY_PATTERN = "elementary"
    CONFIGURATION_PATTERN = "configuration"


@dataclass(frozen=True)
class FeaturePattern:
    """Clause kinds a pattern admits; included-in is admitted by every pattern"""

    kind: PatternKind
    decompositions: FrozenSet[DecompositionKind]
    constraints: FrozenSet[ConstraintKind]
    max_groups: int = 1

    def admits(self, feature: Feature) -> bool:
        groups = 0
        for decomposition in feature.decompositions:
            if decomposition.kind not in self.decompositions:
                return False
            groups += decomposition.kind.is_group
        if groups > self.max_groups:
            return False
        return all(c.kind in self.constraints for c in feature.constraints)

    def exclusive_to(self, other: "FeaturePattern") -> Tuple[FrozenSet, FrozenSet]:
        """Clause kinds this pattern admits that `other` does not"""
        return (
            self.decompositions - other.decompositions,
            self.constraints - other.constraints,
        )


ELEMENTARY = FeaturePattern(
    kind=PatternKind.ELEMENTARY_PATTERN,
    decompositions=frozenset(
        {DecompositionKind.AND, DecompositionKind.XOR, DecompositionKind.OR}
    ),
    constraints=frozenset({ConstraintKind.IMPLY, ConstraintKind.EXCLUDE}),
)

CONFIGURATION = FeaturePattern(
    kind=PatternKind.CONFIGURATION_PATTERN,
    decompositions=frozenset(DecompositionKind),
    constraints=frozenset(ConstraintKind),
)

# Most specific first; the first admitting pattern wins
PATTERNS: Tuple[FeaturePattern, ...] = (ELEMENTARY, CONFIGURATION)

_BY_KIND = {pattern.kind: pattern for pattern in PATTERNS}


def match_pattern(feature: Feature, pattern: PatternKind) -> bool:
    """True iff every relation clause of `feature` is producible by `pattern`"""
    return _BY_KIND[pattern].admits(feature)


def recognize(feature: Feature) -> FeatureKind:
    """
    Classify a feature by its own relation clauses.

    Any select, default or reject clause makes it a configuration feature.
    """
    decompositions, constraints = CONFIGURATION.exclusive_to(ELEMENTARY)
    if any(d.kind in decompositions for d in feature.decompositions) or any(
        c.kind in constraints for c in feature.constraints
    ):
        return FeatureKind.CONFIGURATION
    return FeatureKind.ELEMENTARY
