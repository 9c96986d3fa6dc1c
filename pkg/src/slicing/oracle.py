"""
Brute-force slicing oracle

Recomputes slice semantics by naive fixed-point iteration over the raw edge
list. Quadratic and slow; meant only for cross-checking the slicer.
"""

from typing import FrozenSet, List, Set

from analyzer.mining import feature_type_mining
from featuremodel.graph import Edge, EdgeLabel
from featuremodel.model import FeatureModel
from slicing.query import Direction, Relation, SliceQuery, SliceResult
from slicing.slicer import resolve_query

_FORWARD = frozenset(
    {
        EdgeLabel.DECOMP_AND,
        EdgeLabel.SELECT,
        EdgeLabel.VARIATION,
        EdgeLabel.DEFAULT,
        EdgeLabel.IMPLY,
    }
)
_ROOT_ONLY = frozenset({EdgeLabel.IMPLY})
_PARENT_OF = frozenset(
    {
        EdgeLabel.DECOMP_AND,
        EdgeLabel.DECOMP_XOR,
        EdgeLabel.DECOMP_OR,
        EdgeLabel.SELECT,
        EdgeLabel.VARIATION,
        EdgeLabel.DEFAULT,
    }
)
_GROUP = frozenset({EdgeLabel.DECOMP_OR, EdgeLabel.DECOMP_XOR})


def _forward(edges: List[Edge], members: Set[str], root: str, root_labels: FrozenSet) -> Set[str]:
    changed = True
    while changed:
        changed = False
        for source, label, dest in edges:
            if source not in members or dest in members:
                continue
            allowed = root_labels if source == root else _FORWARD
            if label in allowed:
                members.add(dest)
                changed = True
    return members


def _closures(edges: List[Edge], name: str) -> List[Set[str]]:
    children: List[str] = []
    for source, label, dest in edges:
        if source == name and label is EdgeLabel.DECOMP_AND and dest not in children:
            children.append(dest)
    if not children:
        return [_forward(edges, {name}, name, _FORWARD)]
    return [_forward(edges, {name, child}, name, _ROOT_ONLY) for child in children]


def _without_rejected(edges: List[Edge], members: Set[str], protected: Set[str]) -> Set[str]:
    rejected = set()
    for source, label, dest in edges:
        if label is EdgeLabel.REJECT and source in members and dest not in protected:
            rejected.add(dest)
    return members - rejected


def _ancestors(edges: List[Edge], name: str) -> Set[str]:
    members = {name}
    changed = True
    while changed:
        changed = False
        for source, label, dest in edges:
            if label is EdgeLabel.INCLUDED_IN:
                parent, child = dest, source
            elif label in _PARENT_OF:
                parent, child = source, dest
            else:
                continue
            if child in members and parent not in members:
                members.add(parent)
                changed = True
    return members


def oracle_slice(model: FeatureModel, query: SliceQuery, fuzzy: bool = True) -> SliceResult:
    """Same contract as `slicing.slice`, computed without BFS or visited sets"""
    query = resolve_query(model, query, fuzzy=fuzzy)
    kind, meaning = feature_type_mining(model, query.feature)
    edges = model.graph.edges
    name = query.feature

    if query.direction is Direction.BACKWARD:
        groups = [_without_rejected(edges, _ancestors(edges, name), {name})]
    elif query.relation is Relation.AND:
        groups = [_without_rejected(edges, c, {name}) for c in _closures(edges, name)]
    else:
        protected = {name, *query.alternatives}
        members: Set[str] = set()
        for feature in [name, *query.alternatives]:
            for closure in _closures(edges, feature):
                members |= closure
        for parent, label, child in edges:
            if label in _GROUP and child == name:
                if any(
                    s == parent and k in _GROUP and d in query.alternatives for s, k, d in edges
                ):
                    members.add(parent)
        groups = [_without_rejected(edges, members, protected)]

    return SliceResult(
        slices=[model.restrict(g) for g in groups], query=query, kind=kind, meaning=meaning
    )
