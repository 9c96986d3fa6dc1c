"""
Slicing criteria and results
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from analyzer.mining import Meaning
from analyzer.patterns import FeatureKind
from featuremodel.errors import SliceQueryError
from featuremodel.model import FeatureModel


class Direction(Enum):
    """Slice direction"""

    FORWARD = "forward"
    BACKWARD = "backward"


class Relation(Enum):
    """Slice relation"""

    AND = "and"
    OR = "or"


@dataclass(frozen=True)
class SliceQuery:
    """`Slice <feature> <direction> <relation> [alternatives]`"""

    feature: str
    direction: Direction = Direction.FORWARD
    relation: Relation = Relation.AND
    alternatives: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        if self.alternatives and self.relation is not Relation.OR:
            raise SliceQueryError(
                "alternative features are only allowed with the OR relation",
                SliceQueryError.ALTERNATIVES_WITH_AND,
            )
        if self.feature in self.alternatives:
            raise SliceQueryError(
                f"'{self.feature}' cannot be an alternative of itself",
                SliceQueryError.ALTERNATIVE_EQUALS_FEATURE,
            )

    def describe(self) -> str:
        text = f"Slice {self.feature} {self.direction.value} {self.relation.value}"
        if self.alternatives:
            text += " " + " ".join(self.alternatives)
        return text

    def to_dict(self) -> Dict[str, Any]:
        return {
            "feature": self.feature,
            "direction": self.direction.value,
            "relation": self.relation.value,
            "alternatives": list(self.alternatives),
        }


@dataclass
class SliceResult:
    """Sub-models produced by a slicing query"""

    slices: List[FeatureModel]
    query: SliceQuery
    kind: Optional[FeatureKind] = None
    meaning: Optional[Meaning] = None
    feature_sets: List[FrozenSet[str]] = field(init=False)

    def __post_init__(self):
        self.feature_sets = [frozenset(model.names) for model in self.slices]

    def __len__(self) -> int:
        return len(self.slices)

    def same_slices(self, other: "SliceResult") -> bool:
        """Equal as multisets of feature sets"""
        return sorted(map(sorted, self.feature_sets)) == sorted(map(sorted, other.feature_sets))

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"query": self.query.to_dict()}
        if self.kind is not None:
            result["kind"] = self.kind.value
        if self.meaning is not None:
            result["meaning"] = self.meaning.to_dict()
        result["slices"] = [list(model.names) for model in self.slices]
        return result
