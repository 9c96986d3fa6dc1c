"""
Serialization of feature models to DOT and JSON
"""

from enum import Enum

from featuremodel.model import FeatureModel

from .dot import to_dot, to_pydot
from .json_codec import SCHEMA_VERSION, decode_json, from_json, model_to_dict, to_json


class ExportFormat(Enum):
    """Supported export formats"""

    DOT = "dot"
    JSON = "json"

    @property
    def extension(self) -> str:
        return self.value


def export(model: FeatureModel, fmt: ExportFormat) -> str:
    if fmt is ExportFormat.DOT:
        return to_dot(model)
    return to_json(model)


__all__ = [
    "ExportFormat",
    "SCHEMA_VERSION",
    "decode_json",
    "export",
    "from_json",
    "model_to_dict",
    "to_dot",
    "to_json",
    "to_pydot",
]
