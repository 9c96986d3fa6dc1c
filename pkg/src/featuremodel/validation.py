"""
Structural validation of feature models

`validate` never raises: every problem becomes a Diagnostic so that one pass
reports everything wrong with a model.
"""

from collections import Counter, defaultdict
from typing import Dict, List

import networkx as nx

from featuremodel.diagnostics import Diagnostic, DiagnosticCode, Severity, errors_only
from featuremodel.errors import ModelValidationError
from featuremodel.graph import EdgeLabel
from featuremodel.model import DecompositionKind, Feature, FeatureModel, is_identifier, is_name
from utils.logger import get_logger

logger = get_logger(__name__)


def validate(model: FeatureModel) -> List[Diagnostic]:
    """Check every FeatureModel and Feature invariant; empty list means valid"""
    diagnostics: List[Diagnostic] = []
    declared = set()

    if not is_identifier(model.name):
        diagnostics.append(
            Diagnostic(
                Severity.ERROR,
                DiagnosticCode.INVALID_NAME,
                f"'{model.name}' is not a valid model name",
            )
        )

    for feature in model.features:
        if feature.name in declared:
            diagnostics.append(
                _error(
                    DiagnosticCode.DUPLICATE_FEATURE,
                    f"feature '{feature.name}' is declared more than once",
                    feature,
                )
            )
        declared.add(feature.name)

    for feature in model.features:
        diagnostics.extend(_check_feature(feature, declared))

    diagnostics.extend(_check_cycles(model))
    diagnostics.extend(_check_case_collisions(model))

    logger.debug(f"Validated {model.name}: {len(diagnostics)} diagnostic(s)")
    return diagnostics


def ensure_valid(model: FeatureModel) -> FeatureModel:
    """Return `model` unchanged, or raise ModelValidationError on ERROR diagnostics"""
    problems = errors_only(validate(model))
    if problems:
        raise ModelValidationError(problems)
    return model


def _error(code: DiagnosticCode, message: str, feature: Feature) -> Diagnostic:
    return Diagnostic(Severity.ERROR, code, message, feature=feature.name, span=feature.span)


def _check_feature(feature: Feature, declared: set) -> List[Diagnostic]:
    found: List[Diagnostic] = []
    name = feature.name

    if not is_identifier(name):
        found.append(
            _error(DiagnosticCode.INVALID_NAME, f"'{name}' is not a valid feature name", feature)
        )
    for attribute in feature.attributes:
        if not is_name(attribute.key):
            found.append(
                _error(
                    DiagnosticCode.INVALID_NAME,
                    f"attribute key '{attribute.key}' of '{name}' is not an identifier",
                    feature,
                )
            )

    keys = Counter(a.key for a in feature.attributes)
    for key, count in keys.items():
        if count > 1:
            found.append(
                _error(
                    DiagnosticCode.DUPLICATE_ATTRIBUTE,
                    f"attribute '{key}' repeated in feature '{name}'",
                    feature,
                )
            )
    for attribute in feature.attributes:
        if not attribute.values:
            found.append(
                _error(
                    DiagnosticCode.EMPTY_ATTRIBUTE,
                    f"attribute '{attribute.key}' of '{name}' has no value",
                    feature,
                )
            )

    groups = [d for d in feature.decompositions if d.kind.is_group]
    if len(groups) > 1:
        found.append(
            _error(
                DiagnosticCode.MULTIPLE_GROUPS,
                f"feature '{name}' has {len(groups)} group decompositions (at most one allowed)",
                feature,
            )
        )

    for decomposition in feature.decompositions:
        problem = _decomposition_problem(decomposition)
        if problem:
            found.append(
                _error(DiagnosticCode.MALFORMED_DECOMPOSITION, f"{problem} in '{name}'", feature)
            )
        members = (
            decomposition.children
            if decomposition.kind.is_group
            else decomposition.variations
        )
        for member, count in Counter(members).items():
            if count > 1:
                found.append(
                    _error(
                        DiagnosticCode.DUPLICATE_CHILD,
                        f"'{member}' appears {count} times in a {decomposition.kind.value} "
                        f"clause of '{name}'",
                        feature,
                    )
                )

    for relation, target in feature.references():
        if target == name:
            found.append(
                _error(
                    DiagnosticCode.SELF_REFERENCE,
                    f"feature '{name}' references itself ({relation})",
                    feature,
                )
            )
        elif not is_identifier(target):
            found.append(
                _error(
                    DiagnosticCode.INVALID_NAME,
                    f"'{target}' referenced by '{name}' is not a valid feature name",
                    feature,
                )
            )
        elif target not in declared:
            found.append(
                _error(
                    DiagnosticCode.UNRESOLVED,
                    f"unresolved feature '{target}' referenced by '{name}' ({relation})",
                    feature,
                )
            )
    return found


def _decomposition_problem(decomposition) -> str:
    if decomposition.kind.is_group:
        if not decomposition.children:
            return f"empty {decomposition.kind.value} group"
        if decomposition.base or decomposition.variations or decomposition.target:
            return f"{decomposition.kind.value} group with select/default fields"
    elif decomposition.kind is DecompositionKind.SELECT:
        if not decomposition.base:
            return "select without a base feature"
        if not decomposition.variations:
            return "select without variations"
        if decomposition.children or decomposition.target:
            return "select with group/default fields"
    else:
        if not decomposition.target:
            return "default without a target"
        if decomposition.children or decomposition.base or decomposition.variations:
            return "default with group/select fields"
    return ""


def _check_cycles(model: FeatureModel) -> List[Diagnostic]:
    found: List[Diagnostic] = []
    graph = model.graph

    structure = graph.structure
    for component in _ordered_components(structure):
        first = model.get(component[0])
        found.append(
            Diagnostic(
                Severity.ERROR,
                DiagnosticCode.CYCLE,
                "structural cycle between " + ", ".join(component),
                feature=component[0],
                span=first.span if first else None,
            )
        )

    implies = graph.subgraph([EdgeLabel.IMPLY])
    for component in _ordered_components(implies):
        first = model.get(component[0])
        found.append(
            Diagnostic(
                Severity.WARNING,
                DiagnosticCode.IMPLY_CYCLE,
                "imply chain forms a cycle: " + ", ".join(component),
                feature=component[0],
                span=first.span if first else None,
            )
        )
    return found


def _ordered_components(graph: nx.DiGraph) -> List[List[str]]:
    order = {name: i for i, name in enumerate(graph.nodes)}
    components = [
        sorted(c, key=order.__getitem__)
        for c in nx.strongly_connected_components(graph)
        if len(c) > 1
    ]
    return sorted(components, key=lambda c: order[c[0]])


def _check_case_collisions(model: FeatureModel) -> List[Diagnostic]:
    spellings: Dict[str, List[str]] = defaultdict(list)
    for name in model.names:
        spellings[name.casefold()].append(name)

    found: List[Diagnostic] = []
    for names in spellings.values():
        if len(names) > 1:
            feature = model.feature(names[1])
            found.append(
                Diagnostic(
                    Severity.WARNING,
                    DiagnosticCode.CASE_COLLISION,
                    "feature names differ only by case: " + ", ".join(names),
                    feature=feature.name,
                    span=feature.span,
                )
            )
    return found
