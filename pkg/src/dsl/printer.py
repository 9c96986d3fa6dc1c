"""
Canonical pretty-printer for the `.fm` feature model language

Output uses prefix decompositions only, 2-space indentation and a fixed
clause order (decompositions, constraints, included in).
"""

from typing import List

from featuremodel.model import (
    Attribute,
    Constraint,
    Decomposition,
    DecompositionKind,
    Feature,
    FeatureModel,
    is_identifier,
)

INDENT = "  "


def quote_value(value: str) -> str:
    """Attribute value as it must appear in source"""
    if is_identifier(value):
        return value
    escaped = (
        value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\t", "\\t")
    )
    return f'"{escaped}"'


def render_attribute(attribute: Attribute) -> str:
    return f"{attribute.key}: " + ", ".join(quote_value(v) for v in attribute.values)


def render_decomposition(decomposition: Decomposition) -> str:
    """`and(a, b)`, `select B (variation = x)` or `default T`"""
    if decomposition.kind.is_group:
        return f"{decomposition.kind.value}({', '.join(decomposition.children)})"
    if decomposition.kind is DecompositionKind.SELECT:
        variations = ", ".join(f"variation = {v}" for v in decomposition.variations)
        return f"select {decomposition.base} ({variations})"
    return f"default {decomposition.target}"


def render_constraint(constraint: Constraint) -> str:
    return f"{constraint.kind.value}({constraint.target})"


def render_feature(feature: Feature) -> List[str]:
    lines = [f"feature {feature.name};"]
    if feature.attributes:
        rendered = ", ".join(render_attribute(a) for a in feature.attributes)
        lines.append(f"{INDENT}attributes {rendered};")
    if feature.has_relations:
        lines.append(f"{INDENT}relations")
        clause = INDENT * 2
        for decomposition in feature.decompositions:
            lines.append(f"{clause}decomposition {render_decomposition(decomposition)};")
        for constraint in feature.constraints:
            lines.append(f"{clause}constraints {render_constraint(constraint)};")
        if feature.included_in:
            lines.append(f"{clause}included in {', '.join(feature.included_in)};")
    lines.append("end feature;")
    return lines


def print_canonical(model: FeatureModel) -> str:
    """Deterministic `.fm` text for `model`; parsing it yields an equal model"""
    lines = [f"feature model {model.name};"]
    for feature in model.features:
        lines.append("")
        lines.extend(render_feature(feature))
    if model.features:
        lines.append("")
    lines.append(f"end fm {model.name};")
    return "\n".join(lines) + "\n"
