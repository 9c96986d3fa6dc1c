"""
Typed dependency graph over a feature model

Nodes are feature names; every relation occurrence becomes one labelled,
directed edge. EXCLUDE is stored in both directions. INCLUDED_IN points from
the member to its container, but for ancestry the container counts as the
parent of the member.
"""

from enum import Enum
from functools import cached_property
from itertools import count
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from featuremodel.errors import UnknownFeatureError
from featuremodel.model import DecompositionKind, FeatureModel
from utils.logger import get_logger

logger = get_logger(__name__)


class EdgeLabel(Enum):
    """Edge kinds of the feature graph"""

    DECOMP_AND = "decomp_and"
    DECOMP_XOR = "decomp_xor"
    DECOMP_OR = "decomp_or"
    SELECT = "select"
    VARIATION = "variation"
    DEFAULT = "default"
    IMPLY = "imply"
    EXCLUDE = "exclude"
    REJECT = "reject"
    INCLUDED_IN = "included_in"

    @property
    def display(self) -> str:
        if self.name.startswith("DECOMP_"):
            return f"DECOMP({self.name[len('DECOMP_'):]})"
        return self.name


DECOMP_LABELS: Dict[DecompositionKind, EdgeLabel] = {
    DecompositionKind.AND: EdgeLabel.DECOMP_AND,
    DecompositionKind.XOR: EdgeLabel.DECOMP_XOR,
    DecompositionKind.OR: EdgeLabel.DECOMP_OR,
}

# Labels whose edges form the (acyclic) structure used for ancestry
STRUCTURAL_LABELS: FrozenSet[EdgeLabel] = frozenset(
    {
        EdgeLabel.DECOMP_AND,
        EdgeLabel.DECOMP_XOR,
        EdgeLabel.DECOMP_OR,
        EdgeLabel.SELECT,
        EdgeLabel.VARIATION,
        EdgeLabel.DEFAULT,
        EdgeLabel.INCLUDED_IN,
    }
)

CONSTRAINT_LABELS: FrozenSet[EdgeLabel] = frozenset(
    {EdgeLabel.IMPLY, EdgeLabel.EXCLUDE, EdgeLabel.REJECT}
)

Edge = Tuple[str, EdgeLabel, str]


class FeatureGraph:
    """Labelled multigraph of feature relations, backed by networkx"""

    def __init__(self, name: str = ""):
        self.name = name
        self._graph = nx.MultiDiGraph(name=name)
        self._sequence = count()

    def add_feature(self, name: str, phantom: bool = False):
        if name not in self._graph:
            self._graph.add_node(name, phantom=phantom)

    def add_edge(self, source: str, label: EdgeLabel, dest: str):
        for endpoint in (source, dest):
            if endpoint not in self._graph:
                logger.debug(f"Dangling reference to '{endpoint}' becomes a phantom node")
                self.add_feature(endpoint, phantom=True)
        self._graph.add_edge(source, dest, key=label, order=next(self._sequence))

    @property
    def nodes(self) -> Set[str]:
        return set(self._graph.nodes)

    @property
    def ordered_nodes(self) -> List[str]:
        return list(self._graph.nodes)

    @property
    def phantoms(self) -> List[str]:
        return [n for n, phantom in self._graph.nodes(data="phantom") if phantom]

    @property
    def edges(self) -> List[Edge]:
        return [(u, label, v) for u, v, label in self._graph.edges(keys=True)]

    def has_node(self, name: str) -> bool:
        return name in self._graph

    def has_edge(self, source: str, label: EdgeLabel, dest: str) -> bool:
        return self._graph.has_edge(source, dest, key=label)

    def require(self, name: str):
        if name not in self._graph:
            raise UnknownFeatureError(name, self.name or None)

    def successors(self, name: str, labels: Optional[Iterable[EdgeLabel]] = None) -> List[str]:
        """Targets of out-edges of `name`, in edge insertion order, without repeats"""
        wanted = set(labels) if labels is not None else None
        seen: Dict[str, None] = {}
        out_edges = sorted(
            self._graph.out_edges(name, keys=True, data="order"), key=lambda edge: edge[3]
        )
        for _, dest, label, _ in out_edges:
            if wanted is None or label in wanted:
                seen.setdefault(dest, None)
        return list(seen)

    def in_edges(self, name: str) -> List[Edge]:
        return [(u, label, v) for u, v, label in self._graph.in_edges(name, keys=True)]

    @cached_property
    def structure(self) -> nx.DiGraph:
        """Parent-to-child relation over the structural labels"""
        tree = nx.DiGraph()
        tree.add_nodes_from(self._graph.nodes)
        for source, label, dest in self.edges:
            if label is EdgeLabel.INCLUDED_IN:
                tree.add_edge(dest, source)
            elif label in STRUCTURAL_LABELS:
                tree.add_edge(source, dest)
        return tree

    def subgraph(self, labels: Iterable[EdgeLabel]) -> nx.DiGraph:
        """Plain digraph holding only edges with the given labels"""
        wanted = set(labels)
        view = nx.DiGraph()
        view.add_nodes_from(self._graph.nodes)
        view.add_edges_from((u, v) for u, label, v in self.edges if label in wanted)
        return view

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def __repr__(self) -> str:
        return (
            f"FeatureGraph({self.name!r}, nodes={self._graph.number_of_nodes()}, "
            f"edges={self._graph.number_of_edges()})"
        )


def build_graph(model: FeatureModel) -> FeatureGraph:
    """Materialize every relation of `model` as a labelled edge"""
    graph = FeatureGraph(model.name)
    for feature in model.features:
        graph.add_feature(feature.name)

    for feature in model.features:
        source = feature.name
        for decomposition in feature.decompositions:
            if decomposition.kind.is_group:
                label = DECOMP_LABELS[decomposition.kind]
                for child in decomposition.children:
                    graph.add_edge(source, label, child)
            elif decomposition.kind is DecompositionKind.SELECT:
                if decomposition.base:
                    graph.add_edge(source, EdgeLabel.SELECT, decomposition.base)
                for variation in decomposition.variations:
                    graph.add_edge(source, EdgeLabel.VARIATION, variation)
            elif decomposition.target:
                graph.add_edge(source, EdgeLabel.DEFAULT, decomposition.target)

        for constraint in feature.constraints:
            label = EdgeLabel[constraint.kind.name]
            graph.add_edge(source, label, constraint.target)
            if label is EdgeLabel.EXCLUDE:
                graph.add_edge(constraint.target, label, source)

        for container in feature.included_in:
            graph.add_edge(source, EdgeLabel.INCLUDED_IN, container)

    logger.debug(f"Built graph for {model.name}: {graph!r}")
    return graph


def ancestors(graph: FeatureGraph, name: str) -> Set[str]:
    """All features that structurally lead to `name` (excluding itself)"""
    graph.require(name)
    return set(nx.ancestors(graph.structure, name))


def descendants(graph: FeatureGraph, name: str) -> Set[str]:
    """All features structurally reachable from `name` (excluding itself)"""
    graph.require(name)
    return set(nx.descendants(graph.structure, name))


def dependents(graph: FeatureGraph, name: str) -> Dict[EdgeLabel, List[str]]:
    """Immediate reverse neighbours of `name`, grouped by edge label"""
    graph.require(name)
    grouped: Dict[EdgeLabel, List[str]] = {}
    for source, label, _ in graph.in_edges(name):
        members = grouped.setdefault(label, [])
        if source not in members:
            members.append(source)
    return grouped
