"""
Graph-based feature model slicing

Forward slices collect the features that might be affected by a selected
feature, backward slices the features that might affect it. Traversal is
breadth-first with neighbours expanded in declaration order.
"""

from collections import deque
from dataclasses import replace
from typing import Deque, Iterable, List, Set

from analyzer.mining import feature_type_mining
from featuremodel.errors import SliceQueryError, UnknownFeatureError
from featuremodel.graph import EdgeLabel, FeatureGraph, ancestors
from featuremodel.model import FeatureModel
from slicing.query import Direction, Relation, SliceQuery, SliceResult
from utils.logger import get_logger

logger = get_logger(__name__)

# Edges followed by the forward AND closure; XOR/OR children are not compulsory
FORWARD_LABELS = frozenset(
    {
        EdgeLabel.DECOMP_AND,
        EdgeLabel.SELECT,
        EdgeLabel.VARIATION,
        EdgeLabel.DEFAULT,
        EdgeLabel.IMPLY,
    }
)
ROOT_LABELS = frozenset({EdgeLabel.IMPLY})
ALTERNATIVE_GROUP_LABELS = frozenset({EdgeLabel.DECOMP_OR, EdgeLabel.DECOMP_XOR})


def _expand(graph: FeatureGraph, reached: Set[str], queue: Deque[str]) -> Set[str]:
    while queue:
        node = queue.popleft()
        for neighbour in graph.successors(node, FORWARD_LABELS):
            if neighbour not in reached:
                reached.add(neighbour)
                queue.append(neighbour)
    return reached


def and_closure(graph: FeatureGraph, root: str, seed: str) -> Set[str]:
    """`root`, `seed` and everything forward-reachable from `seed` or from root's implies"""
    reached = {root}
    queue: Deque[str] = deque()
    for start in [seed] + graph.successors(root, ROOT_LABELS):
        if start not in reached:
            reached.add(start)
            queue.append(start)
    return _expand(graph, reached, queue)


def full_closure(graph: FeatureGraph, root: str) -> Set[str]:
    return _expand(graph, {root}, deque([root]))


def and_children(graph: FeatureGraph, name: str) -> List[str]:
    return graph.successors(name, [EdgeLabel.DECOMP_AND])


def and_closures(graph: FeatureGraph, name: str) -> List[Set[str]]:
    """One closure per AND child of `name`, or the closure of `name` when it has none"""
    children = and_children(graph, name)
    if not children:
        return [full_closure(graph, name)]
    return [and_closure(graph, name, child) for child in children]


def reject_filter(graph: FeatureGraph, members: Set[str], protected: Iterable[str]) -> Set[str]:
    """Drop every feature rejected by an in-slice configuration, except `protected`"""
    rejected: Set[str] = set()
    for member in members:
        rejected.update(graph.successors(member, [EdgeLabel.REJECT]))
    return members - (rejected - set(protected))


def shared_parents(graph: FeatureGraph, name: str, alternatives: Iterable[str]) -> Set[str]:
    """Parents whose OR/XOR group holds `name` and at least one alternative"""
    wanted = set(alternatives)
    parents: Set[str] = set()
    for parent, label, _ in graph.in_edges(name):
        if label in ALTERNATIVE_GROUP_LABELS and wanted & set(
            graph.successors(parent, ALTERNATIVE_GROUP_LABELS)
        ):
            parents.add(parent)
    return parents


def _models(model: FeatureModel, groups: Iterable[Set[str]]) -> List[FeatureModel]:
    return [model.restrict(members) for members in groups]


def select_and(model: FeatureModel, name: str) -> List[FeatureModel]:
    """Forward AND slices of `name`, one per immediate AND child"""
    model.feature(name)
    graph = model.graph
    closures = and_closures(graph, name)
    logger.debug(f"select_and({name}): {len(closures)} seed(s)")
    return _models(model, (reject_filter(graph, c, [name]) for c in closures))


def select_or(
    model: FeatureModel, name: str, alternatives: Iterable[str] = ()
) -> List[FeatureModel]:
    """Single forward OR slice covering `name` and its alternatives"""
    alternatives = list(alternatives)
    if name in alternatives:
        raise SliceQueryError(
            f"feature '{name}' cannot be its own alternative",
            SliceQueryError.ALTERNATIVE_EQUALS_FEATURE,
        )
    for feature in [name] + alternatives:
        model.feature(feature)
    graph = model.graph

    members: Set[str] = set()
    for feature in [name] + alternatives:
        for closure in and_closures(graph, feature):
            members |= closure
    members |= shared_parents(graph, name, alternatives)

    members = reject_filter(graph, members, [name] + alternatives)
    logger.debug(f"select_or({name}, {alternatives}): {len(members)} feature(s)")
    return _models(model, [members])


def parent_slice(model: FeatureModel, name: str) -> List[FeatureModel]:
    """Single backward slice: `name` and all of its ancestors"""
    graph = model.graph
    members = {name} | ancestors(graph, name)
    return _models(model, [reject_filter(graph, members, [name])])


def resolve_query(model: FeatureModel, query: SliceQuery, fuzzy: bool = True) -> SliceQuery:
    """Map query names to declared features, re-checking the alternative rules"""
    feature = model.resolve(query.feature, fuzzy=fuzzy)
    alternatives = []
    for alternative in query.alternatives:
        try:
            alternatives.append(model.resolve(alternative, fuzzy=fuzzy))
        except UnknownFeatureError:
            raise SliceQueryError(
                f"unknown alternative feature '{alternative}'",
                SliceQueryError.UNKNOWN_ALTERNATIVE,
            ) from None
    return replace(query, feature=feature, alternatives=tuple(dict.fromkeys(alternatives)))


def slice(model: FeatureModel, query: SliceQuery, fuzzy: bool = True) -> SliceResult:
    """Run a slicing query; BACKWARD ignores the relation"""
    query = resolve_query(model, query, fuzzy=fuzzy)
    kind, meaning = feature_type_mining(model, query.feature)

    if query.direction is Direction.BACKWARD:
        slices = parent_slice(model, query.feature)
    elif query.relation is Relation.AND:
        slices = select_and(model, query.feature)
    else:
        slices = select_or(model, query.feature, query.alternatives)

    logger.info(f"{query.describe()}: {len(slices)} slice(s)")
    return SliceResult(slices=slices, query=query, kind=kind, meaning=meaning)
