"""
Feature type mining: the kind of a feature and its meaning
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from analyzer.patterns import FeatureKind, recognize
from dsl.printer import render_constraint, render_decomposition
from featuremodel.model import Feature, FeatureModel
from utils.logger import get_logger

logger = get_logger(__name__)

EMPTY = "---"
VARIATION_KEY = "variation"


@dataclass(frozen=True)
class Meaning:
    """The semantics tuple (name, decomposition, constraint, included in) of a feature"""

    name: str
    decomposition: Tuple[str, ...] = ()
    constraint: Tuple[str, ...] = ()
    included_in: Tuple[str, ...] = ()
    # Echo of the `variation` attribute; informational only
    variation: Tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def of(cls, feature: Feature) -> "Meaning":
        variation = feature.attribute(VARIATION_KEY)
        return cls(
            name=feature.name,
            decomposition=tuple(render_decomposition(d) for d in feature.decompositions),
            constraint=tuple(render_constraint(c) for c in feature.constraints),
            included_in=feature.included_in,
            variation=variation.values if variation else (),
        )

    @property
    def included_in_text(self) -> str:
        return ", ".join(self.included_in) or EMPTY

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "name": self.name,
            "decomposition": list(self.decomposition),
            "constraint": list(self.constraint),
            "included_in": list(self.included_in),
        }
        if self.variation:
            result["variation"] = list(self.variation)
        return result


@dataclass(frozen=True)
class Recognition:
    """Result of feature type mining"""

    kind: FeatureKind
    meaning: Meaning

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "meaning": self.meaning.to_dict()}

    def __iter__(self):
        # (kind, meaning) unpacking
        return iter((self.kind, self.meaning))


def feature_type_mining(
    model: FeatureModel, name: str, fuzzy: bool = True
) -> Recognition:
    """Recognize the feature `name` of `model`; raises UnknownFeatureError"""
    feature = model.feature(model.resolve(name, fuzzy=fuzzy))
    kind = recognize(feature)
    logger.debug(f"Recognized {feature.name} as {kind.value}")
    return Recognition(kind=kind, meaning=Meaning.of(feature))


def classify_model(model: FeatureModel) -> List[Tuple[str, FeatureKind]]:
    """Kind of every feature in declaration order"""
    return [(feature.name, recognize(feature)) for feature in model.features]


def configuration_features(model: FeatureModel) -> List[str]:
    return [name for name, kind in classify_model(model) if kind is FeatureKind.CONFIGURATION]

