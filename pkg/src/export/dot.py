"""
Graphviz DOT rendering of feature models
"""

import pydot

from analyzer.patterns import FeatureKind, recognize
from featuremodel.graph import EdgeLabel
from featuremodel.model import FeatureModel


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_pydot(model: FeatureModel) -> pydot.Dot:
    """Build the pydot graph: one node per feature, one edge per relation"""
    dot = pydot.Dot(_quote(model.name), graph_type="digraph")
    graph = model.graph
    order = {name: index for index, name in enumerate(graph.ordered_nodes)}

    for feature in model.features:
        attributes = {"shape": "box"}
        if recognize(feature) is FeatureKind.CONFIGURATION:
            attributes["peripheries"] = "2"
        dot.add_node(pydot.Node(_quote(feature.name), **attributes))

    for source, label, dest in graph.edges:
        attributes = {"label": label.value}
        if label is EdgeLabel.EXCLUDE:
            if order[source] > order[dest]:
                continue
            attributes["dir"] = "none"
        elif label is EdgeLabel.REJECT:
            attributes["style"] = "dashed"
        dot.add_edge(pydot.Edge(_quote(source), _quote(dest), **attributes))

    return dot


def to_dot(model: FeatureModel) -> str:
    """DOT text for `model`; equal models give byte-identical output"""
    return to_pydot(model).to_string()
