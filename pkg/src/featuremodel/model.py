"""
Domain types for feature models

A FeatureModel is an ordered, immutable collection of features. Each feature
carries attributes and three kinds of relations: decompositions (and/xor/or
groups, select, default), cross-tree constraints (imply/exclude/reject) and
included-in memberships naming the configurations it belongs to.
"""

import re
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple, TYPE_CHECKING

from featuremodel.errors import UnknownFeatureError
from utils.logger import get_logger

if TYPE_CHECKING:
    from featuremodel.graph import FeatureGraph

logger = get_logger(__name__)


@dataclass(frozen=True)
class SourceSpan:
    """Location of a construct in `.fm` source text (1-based)"""

    line: int
    column: int
    length: int = 0

    def __post_init__(self):
        if self.line < 1 or self.column < 1 or self.length < 0:
            raise ValueError(f"invalid source span {self.line}:{self.column}+{self.length}")

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class DecompositionKind(Enum):
    """Decomposition relation kinds"""

    AND = "and"
    XOR = "xor"
    OR = "or"
    SELECT = "select"
    DEFAULT = "default"

    @property
    def is_group(self) -> bool:
        return self in GROUP_KINDS


GROUP_KINDS = frozenset({DecompositionKind.AND, DecompositionKind.XOR, DecompositionKind.OR})


class ConstraintKind(Enum):
    """Cross-tree constraint kinds"""

    IMPLY = "imply"
    EXCLUDE = "exclude"
    REJECT = "reject"


@dataclass(frozen=True)
class Attribute:
    """A named characteristic of a feature with one or more string values"""

    key: str
    values: Tuple[str, ...]


@dataclass(frozen=True)
class Decomposition:
    """
    One decomposition clause.

    Group kinds (and/xor/or) use `children`; SELECT uses `base` and
    `variations`; DEFAULT uses `target`.
    """

    kind: DecompositionKind
    children: Tuple[str, ...] = ()
    base: Optional[str] = None
    variations: Tuple[str, ...] = ()
    target: Optional[str] = None

    @classmethod
    def group(cls, kind: DecompositionKind, children: Iterable[str]) -> "Decomposition":
        if not kind.is_group:
            raise ValueError(f"{kind.value} is not a group decomposition")
        return cls(kind=kind, children=tuple(children))

    @classmethod
    def select(cls, base: str, variations: Iterable[str]) -> "Decomposition":
        return cls(kind=DecompositionKind.SELECT, base=base, variations=tuple(variations))

    @classmethod
    def default(cls, target: str) -> "Decomposition":
        return cls(kind=DecompositionKind.DEFAULT, target=target)

    def referenced(self) -> Tuple[str, ...]:
        """All feature names this clause mentions, in source order"""
        if self.kind.is_group:
            return self.children
        if self.kind is DecompositionKind.SELECT:
            return ((self.base,) if self.base else ()) + self.variations
        return (self.target,) if self.target else ()


@dataclass(frozen=True)
class Constraint:
    """A cross-tree constraint from the owning feature to `target`"""

    kind: ConstraintKind
    target: str


@dataclass(frozen=True)
class Feature:
    """A named feature with its attributes and relations"""

    name: str
    attributes: Tuple[Attribute, ...] = ()
    decompositions: Tuple[Decomposition, ...] = ()
    constraints: Tuple[Constraint, ...] = ()
    included_in: Tuple[str, ...] = ()
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    @property
    def group(self) -> Optional[Decomposition]:
        """The (first) and/xor/or decomposition, if any"""
        for decomposition in self.decompositions:
            if decomposition.kind.is_group:
                return decomposition
        return None

    @property
    def has_relations(self) -> bool:
        return bool(self.decompositions or self.constraints or self.included_in)

    def attribute(self, key: str) -> Optional[Attribute]:
        for attribute in self.attributes:
            if attribute.key == key:
                return attribute
        return None

    def constraint_targets(self, kind: ConstraintKind) -> Tuple[str, ...]:
        return tuple(c.target for c in self.constraints if c.kind is kind)

    def references(self) -> Iterator[Tuple[str, str]]:
        """Yield (relation description, referenced name) for every relation"""
        for decomposition in self.decompositions:
            for name in decomposition.referenced():
                yield decomposition.kind.value, name
        for constraint in self.constraints:
            yield constraint.kind.value, constraint.target
        for container in self.included_in:
            yield "included in", container

    def restricted(self, keep: Set[str]) -> "Feature":
        """Copy of this feature with every relation outside `keep` dropped"""
        decompositions: List[Decomposition] = []
        for decomposition in self.decompositions:
            if decomposition.kind.is_group:
                children = tuple(c for c in decomposition.children if c in keep)
                if children:
                    decompositions.append(replace(decomposition, children=children))
            elif decomposition.kind is DecompositionKind.SELECT:
                variations = tuple(v for v in decomposition.variations if v in keep)
                if decomposition.base in keep and variations:
                    decompositions.append(replace(decomposition, variations=variations))
            elif decomposition.target in keep:
                decompositions.append(decomposition)

        return replace(
            self,
            decompositions=tuple(decompositions),
            constraints=tuple(c for c in self.constraints if c.target in keep),
            included_in=tuple(c for c in self.included_in if c in keep),
        )


RESERVED_WORDS = frozenset(
    {
        "feature",
        "model",
        "end",
        "fm",
        "attributes",
        "relations",
        "decomposition",
        "constraints",
        "included",
        "in",
        "and",
        "xor",
        "or",
        "select",
        "default",
        "variation",
        "imply",
        "exclude",
        "reject",
    }
)

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_-]*")
_SEPARATORS = re.compile(r"[-_]")


def is_name(text: str) -> bool:
    """True for a lexically valid identifier (reserved words included)"""
    return _NAME.fullmatch(text) is not None


def is_identifier(text: str) -> bool:
    """True for a name usable as a feature identifier"""
    return is_name(text) and text.lower() not in RESERVED_WORDS


def _fold(name: str) -> str:
    return _SEPARATORS.sub("-", name).casefold()


@dataclass(frozen=True)
class FeatureModel:
    """
    A named, ordered collection of features.

    Duplicate names are representable so that validation can report them;
    lookups resolve to the first declaration.
    """

    name: str
    features: Tuple[Feature, ...] = ()

    @cached_property
    def _index(self) -> Dict[str, Feature]:
        index: Dict[str, Feature] = {}
        for feature in self.features:
            index.setdefault(feature.name, feature)
        return index

    @cached_property
    def graph(self) -> "FeatureGraph":
        from featuremodel.graph import build_graph

        return build_graph(self)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self._index)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.features)

    def __iter__(self) -> Iterator[Feature]:
        return iter(self.features)

    def get(self, name: str) -> Optional[Feature]:
        return self._index.get(name)

    def feature(self, name: str) -> Feature:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownFeatureError(name, self.name) from None

    def resolve(self, name: str, fuzzy: bool = True) -> str:
        """
        Resolve a user-supplied feature name to a declared one.

        Exact matches win. Otherwise, when `fuzzy` is set, a unique match
        ignoring case and treating `-` and `_` alike is accepted.
        """
        if name in self._index:
            return name
        if fuzzy:
            folded = _fold(name)
            matches = [n for n in self._index if _fold(n) == folded]
            if len(matches) == 1:
                logger.warning(f"Resolved feature name '{name}' to '{matches[0]}'")
                return matches[0]
        raise UnknownFeatureError(name, self.name)

    def restrict(self, names: Iterable[str]) -> "FeatureModel":
        """Sub-model over `names` (declaration order kept, outside references dropped)"""
        keep = set(names)
        return FeatureModel(
            name=self.name,
            features=tuple(f.restricted(keep) for f in self.features if f.name in keep),
        )

    def with_features(self, *features: Feature) -> "FeatureModel":
        """New model with `features` appended; the graph is rebuilt lazily"""
        return FeatureModel(name=self.name, features=self.features + tuple(features))
